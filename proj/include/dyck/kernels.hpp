#pragma once

// Data-parallel kernels behind the triangle and codec caches. Each kernel
// has a serial reference in `kernels::serial` and an OpenMP version in
// `kernels::omp`; both must produce identical results. Without OpenMP the
// omp variants compile to the same loops without the pragmas.

#include <cstddef>
#include <span>
#include <vector>

#include "dyck/bigint.hpp"

namespace dyck {

enum class Exec { Serial, Parallel };

/// Dyck-triangle labels for reachable nodes only, packed by isoline:
/// node (i, j) lives at isolines[(i + j) / 2][j]. Columns 0 .. columns-1
/// are complete; entries of later columns are zero placeholders.
struct PackedTriangle {
    std::vector<std::vector<BigInt>> isolines;
    std::size_t columns = 0;

    /// Label of (i, j) from filled columns; 0 when unreachable or j > i.
    /// Requires i < columns for reachable nodes.
    const BigInt& get(std::size_t i, std::size_t j) const noexcept;
};

namespace kernels {

bool openmp_enabled() noexcept;
int max_threads() noexcept;

namespace serial {
/// Appends column `tri.columns` using d(i,j) = d(i-1,j-1) + d(i-1,j+1).
void fill_column(PackedTriangle& tri);
BigInt square_sum(std::span<const BigInt> values);
} // namespace serial

namespace omp {
void fill_column(PackedTriangle& tri);
BigInt square_sum(std::span<const BigInt> values);
} // namespace omp

inline void fill_column(PackedTriangle& tri, Exec exec) {
    exec == Exec::Parallel ? omp::fill_column(tri) : serial::fill_column(tri);
}

inline BigInt square_sum(std::span<const BigInt> values, Exec exec) {
    return exec == Exec::Parallel ? omp::square_sum(values) : serial::square_sum(values);
}

} // namespace kernels
} // namespace dyck
