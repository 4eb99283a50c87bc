#include "dyck/triangle.hpp"

#include <mutex>
#include <string>

#include "dyck/error.hpp"

namespace dyck {

void DynamicsTable::reserve_columns(std::size_t i) const {
    {
        std::shared_lock lock(mutex_);
        if (i < tri_.columns)
            return;
    }
    std::unique_lock lock(mutex_);
    tri_.isolines.reserve(i + 1);
    while (tri_.columns <= i)
        kernels::fill_column(tri_, exec_);
}

std::size_t DynamicsTable::columns() const {
    std::shared_lock lock(mutex_);
    return tri_.columns;
}

BigInt DynamicsTable::at(std::size_t i, std::size_t j) const {
    if (!Node{i, j}.reachable())
        return 0;
    reserve_columns(i);
    std::shared_lock lock(mutex_);
    return tri_.get(i, j);
}

std::vector<BigInt> DynamicsTable::column(std::size_t i) const {
    reserve_columns(i);
    std::shared_lock lock(mutex_);
    std::vector<BigInt> out;
    out.reserve(i / 2 + 1);
    for (std::size_t j = i % 2; j <= i; j += 2)
        out.push_back(tri_.get(i, j));
    return out;
}

BigInt DynamicsTable::column_square_sum(std::size_t i) const {
    const auto values = column(i);
    return kernels::square_sum(values, exec_);
}

DynamicsTable& DynamicsTable::shared() {
    static DynamicsTable table(kernels::openmp_enabled() ? Exec::Parallel : Exec::Serial);
    return table;
}

BigInt dynamics(std::size_t i, std::size_t j) {
    return DynamicsTable::shared().at(i, j);
}

BigInt inverse_dynamics(std::size_t i, std::size_t j, std::size_t n) {
    if (i > 2 * n)
        throw DomainError("node (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") lies beyond the base of the supporting triangle of height " +
                          std::to_string(n));
    return dynamics(2 * n - i, j);
}

BigInt paths_through(std::size_t n, std::size_t i, std::size_t j) {
    BigInt backward = inverse_dynamics(i, j, n);
    if (backward == 0)
        return 0;
    return dynamics(i, j) * backward;
}

BigInt column_square_sum(std::size_t n) {
    return DynamicsTable::shared().column_square_sum(n);
}

} // namespace dyck
