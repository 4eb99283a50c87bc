#include "dyck/word.hpp"

#include <algorithm>

#include "dyck/error.hpp"

namespace dyck {

namespace {

void validate(std::span<const Symbol> symbols) {
    using Kind = ParseError::Kind;
    if (symbols.empty())
        throw ParseError(Kind::Empty, std::nullopt, "empty word: the series has no empty element");

    std::size_t height = 0;
    for (std::size_t p = 0; p < symbols.size(); ++p) {
        if (symbols[p] == Symbol::Open) {
            ++height;
        } else if (height == 0) {
            throw ParseError(Kind::PrefixViolation, p + 1,
                             "unmatched ')' at position " + std::to_string(p + 1));
        } else {
            --height;
        }
    }
    if (height != 0)
        throw ParseError(Kind::Imbalance, std::nullopt,
                         std::to_string(height) + " unmatched '(' at end of word");
}

} // namespace

DyckWord DyckWord::parse(std::string_view text) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (std::size_t p = 0; p < text.size(); ++p) {
        switch (text[p]) {
        case '(': symbols.push_back(Symbol::Open); break;
        case ')': symbols.push_back(Symbol::Close); break;
        default:
            throw ParseError(ParseError::Kind::ForeignCharacter, p + 1,
                             "foreign character at position " + std::to_string(p + 1));
        }
    }
    return from_symbols(std::move(symbols));
}

DyckWord DyckWord::from_symbols(std::vector<Symbol> symbols) {
    validate(symbols);
    return DyckWord(std::move(symbols));
}

DyckWord DyckWord::single_block(std::size_t n) {
    if (n == 0)
        throw DomainError("semilength must be at least 1");
    std::vector<Symbol> symbols(2 * n, Symbol::Close);
    std::fill_n(symbols.begin(), n, Symbol::Open);
    return DyckWord(std::move(symbols));
}

DyckWord DyckWord::blocks(std::size_t n) {
    if (n == 0)
        throw DomainError("semilength must be at least 1");
    std::vector<Symbol> symbols;
    symbols.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        symbols.push_back(Symbol::Open);
        symbols.push_back(Symbol::Close);
    }
    return DyckWord(std::move(symbols));
}

std::string DyckWord::str() const {
    std::string out(symbols_.size(), '(');
    std::transform(symbols_.begin(), symbols_.end(), out.begin(), to_char);
    return out;
}

std::vector<std::size_t> DyckWord::close_positions() const {
    std::vector<std::size_t> out;
    out.reserve(semilength());
    for (std::size_t p = 0; p < symbols_.size(); ++p)
        if (symbols_[p] == Symbol::Close)
            out.push_back(p + 1);
    return out;
}

std::strong_ordering compare_lex(const DyckWord& a, const DyckWord& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    auto sa = a.symbols();
    auto sb = b.symbols();
    return std::lexicographical_compare_three_way(sa.begin(), sa.end(), sb.begin(), sb.end());
}

} // namespace dyck
