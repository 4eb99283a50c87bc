#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dyck/bigint.hpp"
#include "dyck/catalan.hpp"
#include "dyck/polynomials.hpp"
#include "dyck/triangle.hpp"
#include "dyck/word.hpp"

namespace dyck {

/// Index of a word in the Dyck series.
/// Invariant: absolute = relative + catalan_prefix_sum(n - 1), 1 <= relative <= c_n.
struct RankResult {
    std::size_t n = 0;
    BigInt relative;
    BigInt absolute;

    friend bool operator==(const RankResult&, const RankResult&) = default;
};

/// One jump along the series: at `node` the path takes a down-step and
/// skips `size` words that would have continued with an up-step.
struct Leap {
    Node node;
    BigInt size;

    friend bool operator==(const Leap&, const Leap&) = default;
};

struct RankTrace {
    RankResult result;
    std::vector<Leap> leaps;
};

struct UnrankTrace {
    DyckWord word;
    RankResult result;
    std::vector<Leap> leaps;
};

/// Chooses how inverse labels d_{c,j} are fetched. A label at column c
/// and unbalance j comes from the Dyck polynomial p_j when c > factor * j,
/// otherwise from the dynamics table. No factor means the table always.
struct Crossover {
    std::optional<std::size_t> factor = 4;

    static Crossover always_polynomial() { return {0}; }
    static Crossover never_polynomial() { return {std::nullopt}; }

    bool use_polynomial(Node node) const noexcept { return factor && node.i > *factor * node.j; }
};

/// Ranking and unranking over shared read-mostly caches.
class Codec {
public:
    explicit Codec(Crossover crossover = {},
                   const DynamicsTable& table = DynamicsTable::shared(),
                   const PolyMatrix& matrix = PolyMatrix::shared(),
                   const CatalanTable& catalans = CatalanTable::shared())
        : crossover_(crossover), table_(&table), matrix_(&matrix), catalans_(&catalans) {}

    /// Number of 2n-paths from (i, j) to (2n, 0): d_{2n-i, j}.
    /// Throws DomainError when i > 2n.
    BigInt inverse_label(std::size_t i, std::size_t j, std::size_t n) const;

    RankResult rank(const DyckWord& word) const;
    RankTrace rank_traced(const DyckWord& word) const;

    /// Throws DomainError for n = 0 and RangeError unless 1 <= relative <= c_n.
    DyckWord unrank_relative(std::size_t n, const BigInt& relative) const;
    UnrankTrace unrank_relative_traced(std::size_t n, const BigInt& relative) const;

    /// Throws RangeError for index 0.
    std::pair<DyckWord, RankResult> unrank(const BigInt& absolute) const;

    /// Warms every cache a 2n-range word can touch, so later calls only read.
    void prepare(std::size_t n) const;

    const Crossover& crossover() const noexcept { return crossover_; }
    const CatalanTable& catalans() const noexcept { return *catalans_; }

    static const Codec& standard();

private:
    RankResult make_result(std::size_t n, BigInt relative) const;
    BigInt rank_walk(const DyckWord& word, std::vector<Leap>* leaps) const;
    DyckWord unrank_walk(std::size_t n, const BigInt& relative, std::vector<Leap>* leaps) const;

    Crossover crossover_;
    const DynamicsTable* table_;
    const PolyMatrix* matrix_;
    const CatalanTable* catalans_;
};

RankResult rank(const DyckWord& word);
DyckWord unrank_relative(std::size_t n, const BigInt& relative);
std::pair<DyckWord, RankResult> unrank(const BigInt& absolute);

} // namespace dyck
