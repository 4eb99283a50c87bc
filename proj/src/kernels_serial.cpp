#include "dyck/kernels.hpp"

namespace dyck {

namespace {
const BigInt kZero{0};
}

const BigInt& PackedTriangle::get(std::size_t i, std::size_t j) const noexcept {
    if (j > i || (i + j) % 2 != 0)
        return kZero;
    const std::size_t iso = (i + j) / 2;
    if (iso >= isolines.size())
        return kZero;
    return isolines[iso][j];
}

namespace kernels::serial {

void fill_column(PackedTriangle& tri) {
    const std::size_t i = tri.columns;
    tri.isolines.emplace_back(i + 1, BigInt(0));
    if (i == 0) {
        tri.isolines[0][0] = 1;
    } else {
        for (std::size_t j = i % 2; j <= i; j += 2) {
            BigInt& slot = tri.isolines[(i + j) / 2][j];
            slot = tri.get(i - 1, j + 1);
            if (j > 0)
                slot += tri.get(i - 1, j - 1);
        }
    }
    tri.columns = i + 1;
}

BigInt square_sum(std::span<const BigInt> values) {
    BigInt total = 0;
    for (const BigInt& v : values)
        total += v * v;
    return total;
}

} // namespace kernels::serial
} // namespace dyck
