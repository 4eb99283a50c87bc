#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dyck {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (node outside the
/// supporting triangle, empty range, malformed number).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An index lies outside the valid interval of its range or series.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Rejection of a candidate Dyck word. `position()` is 1-based; an empty
/// optional means the problem was detected at the end of the input.
class ParseError : public Error {
public:
    enum class Kind { ForeignCharacter, PrefixViolation, Imbalance, Empty };

    ParseError(Kind kind, std::optional<std::size_t> position, const std::string& what)
        : Error(what), kind_(kind), position_(position) {}

    Kind kind() const noexcept { return kind_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    Kind kind_;
    std::optional<std::size_t> position_;
};

} // namespace dyck
