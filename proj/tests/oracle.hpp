#pragma once

// Brute-force references for the test suites. Nothing here calls into the
// library's recurrences, caches or codec.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck::oracle {

using Big = boost::multiprecision::cpp_int;

/// Binomial coefficient from a freshly built Pascal row.
inline Big binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    std::vector<Big> row{1};
    for (std::size_t r = 1; r <= n; ++r) {
        std::vector<Big> next(r + 1);
        next[0] = next[r] = 1;
        for (std::size_t c = 1; c < r; ++c)
            next[c] = row[c - 1] + row[c];
        row.swap(next);
    }
    return row[k];
}

inline Big catalan_closed_form(std::size_t n) {
    return binomial(2 * n, n) / (n + 1);
}

/// Renders bit pattern `mask` of `length` symbols, most significant first,
/// with 0 -> '(' and 1 -> ')'.
inline std::string render_mask(std::uint64_t mask, std::size_t length) {
    std::string s(length, '(');
    for (std::size_t p = 0; p < length; ++p)
        if (mask >> (length - 1 - p) & 1u)
            s[p] = ')';
    return s;
}

/// Height after every prefix; returns false as soon as a prefix dips below 0.
inline bool nonnegative_prefixes(const std::string& s, long& final_height) {
    long h = 0;
    for (char c : s) {
        h += c == '(' ? 1 : -1;
        if (h < 0)
            return false;
    }
    final_height = h;
    return true;
}

/// All Dyck words of semilength n, by filtering all 2^(2n) strings and
/// sorting. ASCII '(' < ')' so std::string order is the series order.
inline std::vector<std::string> enumerate_words(std::size_t n) {
    const std::size_t length = 2 * n;
    std::vector<std::string> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
        std::string s = render_mask(mask, length);
        long h = 0;
        if (nonnegative_prefixes(s, h) && h == 0)
            out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of strings of length i with nonnegative prefixes ending at height j.
inline Big count_prefix_paths(std::size_t i, std::size_t j) {
    Big count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << i); ++mask) {
        long h = 0;
        if (nonnegative_prefixes(render_mask(mask, i), h) && h == static_cast<long>(j))
            ++count;
    }
    return count;
}

/// Number of words among `words` whose path passes through (i, j).
inline std::size_t count_visiting(const std::vector<std::string>& words, std::size_t i,
                                  std::size_t j) {
    std::size_t count = 0;
    for (const auto& w : words) {
        long h = 0;
        for (std::size_t p = 0; p < i; ++p)
            h += w[p] == '(' ? 1 : -1;
        if (h == static_cast<long>(j))
            ++count;
    }
    return count;
}

} // namespace dyck::oracle
