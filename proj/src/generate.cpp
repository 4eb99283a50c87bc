#include "dyck/generate.hpp"

#include <algorithm>

#include "dyck/error.hpp"

namespace dyck {

WordStream::WordStream(std::size_t n) {
    if (n == 0)
        throw DomainError("generate: semilength must be at least 1 (no empty word)");
    symbols_.assign(2 * n, Symbol::Close);
    std::fill_n(symbols_.begin(), n, Symbol::Open);
}

// Rightmost OPEN with positive height before it becomes CLOSE; the suffix
// is then rewritten to its smallest completion (all remaining OPENs first).
bool WordStream::step() {
    const std::size_t n = symbols_.size() / 2;
    // Walk right to left, keeping the prefix counts of [0, p).
    std::size_t opens = n;
    std::size_t closes = n;
    for (std::size_t p = symbols_.size(); p-- > 0;) {
        if (symbols_[p] == Symbol::Open) {
            --opens;
            if (opens > closes) {
                symbols_[p] = Symbol::Close;
                const std::size_t open_left = n - opens;
                auto tail = symbols_.begin() + static_cast<std::ptrdiff_t>(p) + 1;
                std::fill_n(tail, open_left, Symbol::Open);
                std::fill(tail + static_cast<std::ptrdiff_t>(open_left), symbols_.end(), Symbol::Close);
                return true;
            }
        } else {
            --closes;
        }
    }
    return false;
}

std::optional<DyckWord> WordStream::next() {
    if (done_)
        return std::nullopt;
    if (started_ && !step()) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    return DyckWord::from_symbols(symbols_);
}

} // namespace dyck
