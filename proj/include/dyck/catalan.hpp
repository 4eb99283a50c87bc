#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "dyck/bigint.hpp"

namespace dyck {

/// Position of an element of the Dyck series: its range (semilength) and
/// its 1-based ordinal inside that range.
struct RangeIndex {
    std::size_t n = 0;
    BigInt relative;

    friend bool operator==(const RangeIndex&, const RangeIndex&) = default;
};

/// Append-only cache of Catalan numbers c_k and prefix sums c_1 + ... + c_k.
///
/// Values are filled with the multiplicative recurrence
/// c_{k+1} = c_k * 2(2k+1) / (k+2), which divides exactly. Reads take a
/// shared lock and return copies, so concurrent callers never see a
/// partially grown table.
class CatalanTable {
public:
    CatalanTable();

    BigInt value(std::size_t n) const;
    BigInt prefix_sum(std::size_t n) const;

    /// Inverts I_abs = I_rel + prefix_sum(n - 1) by subtracting c_1, c_2, ...
    /// in turn. Throws RangeError for index 0.
    RangeIndex locate(const BigInt& absolute) const;

    /// Number of cached values (highest cached index + 1).
    std::size_t size() const;

    static CatalanTable& shared();

private:
    void grow_locked(std::size_t n) const;
    void ensure(std::size_t n) const;

    mutable std::shared_mutex mutex_;
    mutable std::vector<BigInt> values_;
    mutable std::vector<BigInt> prefix_;
};

BigInt catalan(std::size_t n);
BigInt catalan_prefix_sum(std::size_t n);
RangeIndex range_of_index(const BigInt& absolute);

} // namespace dyck
