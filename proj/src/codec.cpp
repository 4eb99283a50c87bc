#include "dyck/codec.hpp"

#include <stdexcept>
#include <string>

#include "dyck/error.hpp"

namespace dyck {

BigInt Codec::inverse_label(std::size_t i, std::size_t j, std::size_t n) const {
    if (i > 2 * n)
        throw DomainError("node (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") lies beyond the base of the supporting triangle of height " +
                          std::to_string(n));
    const Node mirror{2 * n - i, j};
    if (!mirror.reachable())
        return 0;
    if (crossover_.use_polynomial(mirror))
        return matrix_->evaluate(mirror.j, mirror.isoline());
    return table_->at(mirror);
}

RankResult Codec::make_result(std::size_t n, BigInt relative) const {
    RankResult out;
    out.n = n;
    out.absolute = relative + catalans_->prefix_sum(n - 1);
    out.relative = std::move(relative);
    return out;
}

BigInt Codec::rank_walk(const DyckWord& word, std::vector<Leap>* leaps) const {
    const std::size_t n = word.semilength();
    BigInt relative = 1;
    std::size_t j = 0;
    std::size_t opens = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == Symbol::Open) {
            ++opens;
            ++j;
            continue;
        }
        // Trailing closes sit on the outer diagonal and skip nothing.
        if (opens < n) {
            BigInt skipped = inverse_label(i + 1, j + 1, n);
            relative += skipped;
            if (leaps)
                leaps->push_back({{i, j}, std::move(skipped)});
        }
        --j;
    }
    return relative;
}

RankResult Codec::rank(const DyckWord& word) const {
    return make_result(word.semilength(), rank_walk(word, nullptr));
}

RankTrace Codec::rank_traced(const DyckWord& word) const {
    RankTrace out;
    out.result = make_result(word.semilength(), rank_walk(word, &out.leaps));
    return out;
}

DyckWord Codec::unrank_walk(std::size_t n, const BigInt& relative, std::vector<Leap>* leaps) const {
    if (n == 0)
        throw DomainError("semilength must be at least 1");
    if (relative < 1 || relative > catalans_->value(n))
        throw RangeError("relative index " + to_decimal(relative) + " outside [1, c_" +
                         std::to_string(n) + "] = [1, " + to_decimal(catalans_->value(n)) + "]");

    const std::size_t length = 2 * n;
    std::vector<Symbol> symbols;
    symbols.reserve(length);
    symbols.push_back(Symbol::Open);

    BigInt jump = relative - 1;
    std::size_t j = 1;
    for (std::size_t i = 1; i < length; ++i) {
        // Words continuing with an up-step; zero on the outer diagonal,
        // which forces the remaining down-steps.
        BigInt ahead = i + j < length ? inverse_label(i + 1, j + 1, n) : BigInt(0);
        if (j > 0 && jump >= ahead) {
            jump -= ahead;
            if (leaps && ahead > 0)
                leaps->push_back({{i, j}, std::move(ahead)});
            symbols.push_back(Symbol::Close);
            --j;
        } else {
            symbols.push_back(Symbol::Open);
            ++j;
        }
    }
    if (jump != 0)
        throw std::logic_error("unrank left an unspent jump of " + to_decimal(jump));
    return DyckWord::from_symbols(std::move(symbols));
}

DyckWord Codec::unrank_relative(std::size_t n, const BigInt& relative) const {
    return unrank_walk(n, relative, nullptr);
}

UnrankTrace Codec::unrank_relative_traced(std::size_t n, const BigInt& relative) const {
    std::vector<Leap> leaps;
    DyckWord word = unrank_walk(n, relative, &leaps);
    return {std::move(word), make_result(n, relative), std::move(leaps)};
}

std::pair<DyckWord, RankResult> Codec::unrank(const BigInt& absolute) const {
    auto [n, relative] = catalans_->locate(absolute);
    DyckWord word = unrank_walk(n, relative, nullptr);
    return {std::move(word), make_result(n, std::move(relative))};
}

void Codec::prepare(std::size_t n) const {
    catalans_->value(n);
    if (n == 0)
        return;
    if (crossover_.factor)
        matrix_->coefficients(n);
    if (crossover_.factor != std::size_t{0})
        table_->reserve_columns(2 * n - 1);
}

const Codec& Codec::standard() {
    static const Codec codec;
    return codec;
}

RankResult rank(const DyckWord& word) {
    return Codec::standard().rank(word);
}

DyckWord unrank_relative(std::size_t n, const BigInt& relative) {
    return Codec::standard().unrank_relative(n, relative);
}

std::pair<DyckWord, RankResult> unrank(const BigInt& absolute) {
    return Codec::standard().unrank(absolute);
}

} // namespace dyck
