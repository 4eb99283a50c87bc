#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

/// Arbitrary-precision signed integer used for every count and index.
using BigInt = boost::multiprecision::cpp_int;

/// Plain decimal rendering, no digit grouping.
std::string to_decimal(const BigInt& value);

/// Parses a nonempty string of ASCII digits. Leading zeros are accepted
/// and mean nothing (no octal or hex prefixes). Throws DomainError otherwise.
BigInt parse_natural(std::string_view text);

} // namespace dyck
