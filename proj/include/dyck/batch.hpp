#pragma once

// Batch ranking/unranking kernels. Items are independent, so the OpenMP
// versions split the batch across threads after warming the shared caches.

#include <cstddef>
#include <span>
#include <vector>

#include "dyck/codec.hpp"
#include "dyck/kernels.hpp"

namespace dyck::kernels {

namespace serial {
std::vector<RankResult> rank_batch(const Codec& codec, std::span<const DyckWord> words);
/// Words with absolute indices first, first + 1, ..., first + count - 1.
std::vector<DyckWord> unrank_batch(const Codec& codec, const BigInt& first, std::size_t count);
} // namespace serial

namespace omp {
std::vector<RankResult> rank_batch(const Codec& codec, std::span<const DyckWord> words);
std::vector<DyckWord> unrank_batch(const Codec& codec, const BigInt& first, std::size_t count);
} // namespace omp

inline std::vector<RankResult> rank_batch(const Codec& codec, std::span<const DyckWord> words,
                                          Exec exec) {
    return exec == Exec::Parallel ? omp::rank_batch(codec, words) : serial::rank_batch(codec, words);
}

inline std::vector<DyckWord> unrank_batch(const Codec& codec, const BigInt& first,
                                          std::size_t count, Exec exec) {
    return exec == Exec::Parallel ? omp::unrank_batch(codec, first, count)
                                  : serial::unrank_batch(codec, first, count);
}

} // namespace dyck::kernels
