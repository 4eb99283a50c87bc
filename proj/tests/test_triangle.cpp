#include <gtest/gtest.h>

#include <thread>

#include "dyck/catalan.hpp"
#include "dyck/error.hpp"
#include "dyck/triangle.hpp"
#include "oracle.hpp"

namespace dyck {
namespace {

TEST(Node, ReachabilityAndIsoline) {
    EXPECT_TRUE((Node{0, 0}.reachable()));
    EXPECT_TRUE((Node{15, 7}.reachable()));
    EXPECT_EQ((Node{15, 7}.isoline()), 11u);
    EXPECT_FALSE((Node{3, 2}.reachable()));
    EXPECT_FALSE((Node{4, 6}.reachable()));
}

TEST(Dynamics, Examples) {
    EXPECT_EQ(dynamics(0, 0), 1);
    EXPECT_EQ(dynamics(12, 0), 132);
    EXPECT_EQ(dynamics(8, 4), 20);
    EXPECT_EQ(dynamics(3, 2), 0);
    EXPECT_EQ(dynamics(2, 5), 0);
}

TEST(Dynamics, TriangleFigure) {
    // Rows of the printed triangle fragment, j = 0 .. 8 over i = 0 .. 15.
    EXPECT_EQ(dynamics(15, 7), 910);
    EXPECT_EQ(dynamics(14, 4), 1001);
    EXPECT_EQ(dynamics(13, 3), 572);
    EXPECT_EQ(dynamics(15, 5), 1638);
    EXPECT_EQ(dynamics(12, 8), 54);
    EXPECT_EQ(dynamics(14, 8), 273);
}

TEST(Dynamics, MatchesExhaustiveCount) {
    for (std::size_t i = 0; i <= 16; ++i)
        for (std::size_t j = 0; j <= i + 1; ++j)
            ASSERT_EQ(dynamics(i, j), oracle::count_prefix_paths(i, j)) << i << "," << j;
}

TEST(Dynamics, DifferenceIdentity) {
    for (std::size_t i = 0; i <= 40; ++i)
        for (std::size_t j = 2; j <= i; ++j)
            if (Node{i, j}.reachable())
                ASSERT_EQ(dynamics(i, j), dynamics(i + 1, j - 1) - dynamics(i, j - 2));
}

TEST(Dynamics, BoundaryRowsAreCatalan) {
    for (std::size_t n = 1; n <= 30; ++n) {
        EXPECT_EQ(dynamics(2 * n, 0), catalan(n));
        EXPECT_EQ(dynamics(2 * n - 1, 1), catalan(n));
    }
}

TEST(Dynamics, DiagonalOfOnes) {
    for (std::size_t k = 0; k <= 40; ++k)
        EXPECT_EQ(dynamics(k, k), 1);
}

TEST(Dynamics, SerialAndParallelTablesAgree) {
    DynamicsTable serial(Exec::Serial), parallel(Exec::Parallel);
    serial.reserve_columns(300);
    parallel.reserve_columns(300);
    for (std::size_t i = 0; i <= 300; i += 13)
        ASSERT_EQ(serial.column(i), parallel.column(i)) << i;
}

TEST(Dynamics, ConcurrentDemandFill) {
    DynamicsTable table(Exec::Serial);
    std::vector<BigInt> got(8);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < got.size(); ++t)
        threads.emplace_back([&, t] { got[t] = table.at(100 + 2 * t, 2 * t); });
    for (auto& th : threads)
        th.join();
    for (std::size_t t = 0; t < got.size(); ++t)
        EXPECT_EQ(got[t], table.at(100 + 2 * t, 2 * t));
    EXPECT_EQ(got[0], catalan(50));
}

TEST(InverseDynamics, Examples) {
    EXPECT_EQ(inverse_dynamics(4, 4, 6), 20);
    EXPECT_EQ(inverse_dynamics(7, 5, 6), 1);
    EXPECT_EQ(inverse_dynamics(6, 2, 6), 9);
    EXPECT_THROW(inverse_dynamics(13, 1, 6), DomainError);
}

TEST(PathsThrough, Examples) {
    EXPECT_EQ(paths_through(6, 12, 0), 132);
    EXPECT_EQ(paths_through(6, 6, 2), 81);
    EXPECT_EQ(paths_through(6, 6, 12), 0);
    EXPECT_THROW(paths_through(2, 5, 1), DomainError);
}

TEST(PathsThrough, MatchesEnumeratedPaths) {
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto words = oracle::enumerate_words(n);
        for (std::size_t i = 0; i <= 2 * n; ++i)
            for (std::size_t j = 0; j <= n; ++j)
                ASSERT_EQ(paths_through(n, i, j), oracle::count_visiting(words, i, j))
                    << n << ": " << i << "," << j;
    }
}

TEST(ColumnSquareSum, Examples) {
    EXPECT_EQ(column_square_sum(6), 132);
    EXPECT_EQ(column_square_sum(0), 1);
    EXPECT_EQ(column_square_sum(8), 1430);
}

TEST(ColumnSquareSum, EqualsCatalan) {
    for (std::size_t n = 0; n <= 60; ++n)
        EXPECT_EQ(column_square_sum(n), oracle::catalan_closed_form(n)) << n;
}

} // namespace
} // namespace dyck
