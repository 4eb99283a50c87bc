#include "dyck/bigint.hpp"

#include <algorithm>

#include "dyck/error.hpp"

namespace dyck {

std::string to_decimal(const BigInt& value) {
    return value.str();
}

BigInt parse_natural(std::string_view text) {
    if (text.empty())
        throw DomainError("expected a natural number, got an empty string");
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw DomainError("expected a natural number, got '" + std::string(text) + "'");
    // cpp_int treats a leading 0 as an octal prefix.
    auto first = text.find_first_not_of('0');
    if (first == std::string_view::npos)
        return BigInt(0);
    return BigInt(std::string(text.substr(first)));
}

} // namespace dyck
