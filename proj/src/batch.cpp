#include "dyck/batch.hpp"

#include <algorithm>
#include <optional>

namespace dyck::kernels {

namespace {

void warm_for_words(const Codec& codec, std::span<const DyckWord> words) {
    std::size_t widest = 0;
    for (const DyckWord& w : words)
        widest = std::max(widest, w.semilength());
    codec.prepare(widest);
}

void warm_for_indices(const Codec& codec, const BigInt& first, std::size_t count) {
    if (count == 0)
        return;
    codec.prepare(codec.catalans().locate(first + (count - 1)).n);
}

} // namespace

namespace serial {

std::vector<RankResult> rank_batch(const Codec& codec, std::span<const DyckWord> words) {
    std::vector<RankResult> out;
    out.reserve(words.size());
    for (const DyckWord& w : words)
        out.push_back(codec.rank(w));
    return out;
}

std::vector<DyckWord> unrank_batch(const Codec& codec, const BigInt& first, std::size_t count) {
    std::vector<DyckWord> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(codec.unrank(first + k).first);
    return out;
}

} // namespace serial

namespace omp {

std::vector<RankResult> rank_batch(const Codec& codec, std::span<const DyckWord> words) {
    warm_for_words(codec, words);
    std::vector<RankResult> out(words.size());
    const auto count = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t k = 0; k < count; ++k)
        out[static_cast<std::size_t>(k)] = codec.rank(words[static_cast<std::size_t>(k)]);
    return out;
}

std::vector<DyckWord> unrank_batch(const Codec& codec, const BigInt& first, std::size_t count) {
    warm_for_indices(codec, first, count);
    // DyckWord has no empty state; fill optionals and unwrap afterwards.
    std::vector<std::optional<DyckWord>> slots(count);
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t k = 0; k < total; ++k)
        slots[static_cast<std::size_t>(k)] = codec.unrank(first + k).first;

    std::vector<DyckWord> out;
    out.reserve(count);
    for (auto& slot : slots)
        out.push_back(std::move(*slot));
    return out;
}

} // namespace omp
} // namespace dyck::kernels
