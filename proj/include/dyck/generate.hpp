#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "dyck/word.hpp"

namespace dyck {

/// Lazy, lexicographically ordered stream over the c_n words of the
/// 2n-range. Holds only the current word.
class WordStream {
public:
    /// Throws DomainError for n = 0.
    explicit WordStream(std::size_t n);

    /// Returns the next word, or nothing once the range is exhausted.
    std::optional<DyckWord> next();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = DyckWord;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(WordStream* stream) : stream_(stream) { advance(); }

        const DyckWord& operator*() const { return *current_; }
        const DyckWord* operator->() const { return &*current_; }
        iterator& operator++() { advance(); return *this; }
        void operator++(int) { advance(); }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

    private:
        void advance() { current_ = stream_->next(); }

        WordStream* stream_ = nullptr;
        std::optional<DyckWord> current_;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    bool step();

    std::vector<Symbol> symbols_;
    bool started_ = false;
    bool done_ = false;
};

inline WordStream generate(std::size_t n) { return WordStream(n); }

} // namespace dyck
