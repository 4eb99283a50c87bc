#pragma once

#include <compare>
#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "dyck/bigint.hpp"
#include "dyck/kernels.hpp"

namespace dyck {

/// Lattice point of the Dyck triangle: i is the parenthesis position,
/// j the unbalance after i symbols.
struct Node {
    std::size_t i = 0;
    std::size_t j = 0;

    constexpr bool reachable() const noexcept { return j <= i && (i + j) % 2 == 0; }
    /// Isoline index (i + j) / 2; meaningful for reachable nodes.
    constexpr std::size_t isoline() const noexcept { return (i + j) / 2; }

    friend constexpr auto operator<=>(const Node&, const Node&) = default;
};

/// Memoized Dyck-triangle labels d_{i,j} (number of nonnegative lattice
/// paths from the origin to (i, j)). Columns are filled on demand in
/// increasing i; each column fill runs on the configured kernel.
class DynamicsTable {
public:
    explicit DynamicsTable(Exec exec = Exec::Parallel) : exec_(exec) {}

    /// d_{i,j}; 0 for unreachable nodes.
    BigInt at(std::size_t i, std::size_t j) const;
    BigInt at(Node node) const { return at(node.i, node.j); }

    /// Reachable labels of column i, bottom (smallest j) to top.
    std::vector<BigInt> column(std::size_t i) const;

    /// Sum of squared labels of column i.
    BigInt column_square_sum(std::size_t i) const;

    /// Fills columns 0 ..= i.
    void reserve_columns(std::size_t i) const;
    std::size_t columns() const;
    Exec exec() const noexcept { return exec_; }

    static DynamicsTable& shared();

private:
    Exec exec_;
    mutable std::shared_mutex mutex_;
    mutable PackedTriangle tri_;
};

BigInt dynamics(std::size_t i, std::size_t j);

/// Label seen walking backwards from (2n, 0): d_{2n-i, j}. Throws
/// DomainError when i > 2n.
BigInt inverse_dynamics(std::size_t i, std::size_t j, std::size_t n);

/// Number of Dyck 2n-paths visiting (i, j). Throws DomainError when i > 2n.
BigInt paths_through(std::size_t n, std::size_t i, std::size_t j);

/// Sum over column n of d_{n,j}^2; equals c_n.
BigInt column_square_sum(std::size_t n);

} // namespace dyck
