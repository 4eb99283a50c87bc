#pragma once

#include <optional>

#include "dyck/codec.hpp"
#include "dyck/word.hpp"

namespace dyck {

/// Next element of the Dyck series. The last word of a range is followed
/// by the first word of the next range.
DyckWord successor(const DyckWord& word, const Codec& codec = Codec::standard());

/// Previous element of the series; nothing for "()".
std::optional<DyckWord> predecessor(const DyckWord& word, const Codec& codec = Codec::standard());

} // namespace dyck
