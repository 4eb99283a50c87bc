#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

/// The two-letter alphabet, ordered OPEN < CLOSE.
enum class Symbol : std::uint8_t { Open = 0, Close = 1 };

constexpr char to_char(Symbol s) noexcept { return s == Symbol::Open ? '(' : ')'; }

/// A nonempty balanced parenthesis word. Immutable once constructed.
class DyckWord {
public:
    /// Validates strict ASCII '(' / ')' input. Throws ParseError.
    static DyckWord parse(std::string_view text);

    /// Validates a symbol sequence. Throws ParseError.
    static DyckWord from_symbols(std::vector<Symbol> symbols);

    /// '(' * n followed by ')' * n: the first word of the 2n-range.
    static DyckWord single_block(std::size_t n);
    /// "()" repeated n times: the last word of the 2n-range.
    static DyckWord blocks(std::size_t n);

    std::size_t semilength() const noexcept { return symbols_.size() / 2; }
    std::size_t size() const noexcept { return symbols_.size(); }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    Symbol operator[](std::size_t pos) const noexcept { return symbols_[pos]; }

    std::string str() const;

    /// 1-based positions r_1 < ... < r_n of the CLOSE symbols.
    std::vector<std::size_t> close_positions() const;

    friend bool operator==(const DyckWord&, const DyckWord&) = default;

private:
    explicit DyckWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    std::vector<Symbol> symbols_;
};

/// Series order: shorter words first, then symbol-wise with OPEN < CLOSE.
std::strong_ordering compare_lex(const DyckWord& a, const DyckWord& b) noexcept;

inline std::strong_ordering operator<=>(const DyckWord& a, const DyckWord& b) noexcept {
    return compare_lex(a, b);
}

} // namespace dyck
