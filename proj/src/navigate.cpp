#include "dyck/navigate.hpp"

namespace dyck {

// Composed as rank -> +/-1 -> unrank.
DyckWord successor(const DyckWord& word, const Codec& codec) {
    const RankResult here = codec.rank(word);
    return codec.unrank(here.absolute + 1).first;
}

std::optional<DyckWord> predecessor(const DyckWord& word, const Codec& codec) {
    const RankResult here = codec.rank(word);
    if (here.absolute == 1)
        return std::nullopt;
    return codec.unrank(here.absolute - 1).first;
}

} // namespace dyck
