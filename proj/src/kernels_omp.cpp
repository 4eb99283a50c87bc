#include "dyck/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dyck::kernels {

namespace {
// Below this many nodes per column the fork/join costs more than the adds.
constexpr std::ptrdiff_t kParallelColumnMin = 64;
constexpr std::ptrdiff_t kParallelSumMin = 64;
} // namespace

bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace omp {

void fill_column(PackedTriangle& tri) {
    const std::size_t i = tri.columns;
    tri.isolines.emplace_back(i + 1, BigInt(0));
    if (i == 0) {
        tri.isolines[0][0] = 1;
        tri.columns = 1;
        return;
    }

    // Every node of column i lands on a distinct isoline slot, and reads
    // only touch column i - 1, so the iterations are independent.
    const auto count = static_cast<std::ptrdiff_t>(i / 2 + 1);
    const std::size_t base = i % 2;
#pragma omp parallel for schedule(static) if (count >= kParallelColumnMin)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
        const std::size_t j = base + 2 * static_cast<std::size_t>(k);
        BigInt& slot = tri.isolines[(i + j) / 2][j];
        slot = tri.get(i - 1, j + 1);
        if (j > 0)
            slot += tri.get(i - 1, j - 1);
    }
    tri.columns = i + 1;
}

BigInt square_sum(std::span<const BigInt> values) {
    const auto count = static_cast<std::ptrdiff_t>(values.size());
    BigInt total = 0;
#pragma omp parallel if (count >= kParallelSumMin)
    {
        BigInt local = 0;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t k = 0; k < count; ++k)
            local += values[static_cast<std::size_t>(k)] * values[static_cast<std::size_t>(k)];
#pragma omp critical(dyck_square_sum)
        total += local;
    }
    return total;
}

} // namespace omp
} // namespace dyck::kernels
