#include "dyck/catalan.hpp"

#include <mutex>

#include "dyck/error.hpp"

namespace dyck {

CatalanTable::CatalanTable() : values_{BigInt(1)}, prefix_{BigInt(0)} {}

void CatalanTable::grow_locked(std::size_t n) const {
    values_.reserve(n + 1);
    prefix_.reserve(n + 1);
    while (values_.size() <= n) {
        const std::size_t k = values_.size() - 1;
        BigInt next = values_.back() * (2 * (2 * k + 1));
        next /= (k + 2);
        prefix_.push_back(prefix_.back() + next);
        values_.push_back(std::move(next));
    }
}

void CatalanTable::ensure(std::size_t n) const {
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size())
            return;
    }
    std::unique_lock lock(mutex_);
    grow_locked(n);
}

BigInt CatalanTable::value(std::size_t n) const {
    ensure(n);
    std::shared_lock lock(mutex_);
    return values_[n];
}

BigInt CatalanTable::prefix_sum(std::size_t n) const {
    ensure(n);
    std::shared_lock lock(mutex_);
    return prefix_[n];
}

RangeIndex CatalanTable::locate(const BigInt& absolute) const {
    if (absolute <= 0)
        throw RangeError("series is 1-based: index 0 has no element");

    BigInt remaining = absolute;
    for (std::size_t n = 1;; ++n) {
        BigInt c = value(n);
        if (remaining <= c)
            return {n, std::move(remaining)};
        remaining -= c;
    }
}

std::size_t CatalanTable::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

CatalanTable& CatalanTable::shared() {
    static CatalanTable table;
    return table;
}

BigInt catalan(std::size_t n) {
    return CatalanTable::shared().value(n);
}

BigInt catalan_prefix_sum(std::size_t n) {
    return CatalanTable::shared().prefix_sum(n);
}

RangeIndex range_of_index(const BigInt& absolute) {
    return CatalanTable::shared().locate(absolute);
}

} // namespace dyck
