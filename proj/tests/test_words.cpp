#include <gtest/gtest.h>

#include <random>

#include "dyck/error.hpp"
#include "dyck/generate.hpp"
#include "dyck/navigate.hpp"
#include "dyck/word.hpp"
#include "oracle.hpp"

namespace dyck {
namespace {

ParseError parse_failure(std::string_view text) {
    try {
        DyckWord::parse(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error for '" << text << "'";
    return ParseError(ParseError::Kind::Empty, std::nullopt, "");
}

TEST(Parse, AcceptsBalancedWords) {
    const auto w = DyckWord::parse("()");
    EXPECT_EQ(w.semilength(), 1u);
    EXPECT_EQ(w.str(), "()");
    EXPECT_EQ(DyckWord::parse("((()))").semilength(), 3u);
}

TEST(Parse, RejectsPrefixViolation) {
    auto e = parse_failure(")(");
    EXPECT_EQ(e.kind(), ParseError::Kind::PrefixViolation);
    EXPECT_EQ(e.position(), 1u);

    e = parse_failure("())(");
    EXPECT_EQ(e.kind(), ParseError::Kind::PrefixViolation);
    EXPECT_EQ(e.position(), 3u);
}

TEST(Parse, RejectsImbalanceAtEnd) {
    auto e = parse_failure("(()");
    EXPECT_EQ(e.kind(), ParseError::Kind::Imbalance);
    EXPECT_FALSE(e.position());
}

TEST(Parse, RejectsForeignCharacters) {
    for (std::string_view text : {"( )", "[]", "(()x)", "()\n", "(]"}) {
        auto e = parse_failure(text);
        EXPECT_EQ(e.kind(), ParseError::Kind::ForeignCharacter) << text;
    }
    EXPECT_EQ(parse_failure("(()x)").position(), 4u);
}

TEST(Parse, RejectsEmpty) {
    auto e = parse_failure("");
    EXPECT_EQ(e.kind(), ParseError::Kind::Empty);
    EXPECT_FALSE(e.position());
}

TEST(Parse, AgreesWithBruteForceFilter) {
    // Every string up to length 12 is accepted iff the oracle accepts it.
    for (std::size_t length = 1; length <= 12; ++length) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
            const auto s = oracle::render_mask(mask, length);
            long h = 0;
            const bool valid = oracle::nonnegative_prefixes(s, h) && h == 0;
            bool accepted = true;
            try {
                DyckWord::parse(s);
            } catch (const ParseError&) {
                accepted = false;
            }
            ASSERT_EQ(accepted, valid) << s;
        }
    }
}

TEST(Compare, LengthFirstThenOpenBeforeClose) {
    const auto p = [](std::string_view s) { return DyckWord::parse(s); };
    EXPECT_EQ(compare_lex(p("((()))"), p("(()())")), std::strong_ordering::less);
    EXPECT_EQ(compare_lex(p("()"), p("()")), std::strong_ordering::equal);
    EXPECT_EQ(compare_lex(p("()()"), p("((()))")), std::strong_ordering::less);
    EXPECT_EQ(compare_lex(p("()()()"), p("((()))")), std::strong_ordering::greater);
}

TEST(Generate, MatchesEnumerationOracle) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto expected = oracle::enumerate_words(n);
        std::vector<std::string> got;
        for (const auto& w : generate(n))
            got.push_back(w.str());
        EXPECT_EQ(got, expected) << "n=" << n;
    }
}

TEST(Generate, ThreeRange) {
    std::vector<std::string> got;
    for (const auto& w : generate(3))
        got.push_back(w.str());
    EXPECT_EQ(got, (std::vector<std::string>{"((()))", "(()())", "(())()", "()(())", "()()()"}));
}

TEST(Generate, CountsSortednessAndEndpoints) {
    for (std::size_t n = 1; n <= 12; ++n) {
        WordStream stream(n);
        auto first = stream.next();
        ASSERT_TRUE(first);
        EXPECT_EQ(*first, DyckWord::single_block(n));
        BigInt count = 1;
        DyckWord last = *first;
        while (auto w = stream.next()) {
            ASSERT_EQ(compare_lex(last, *w), std::strong_ordering::less);
            last = *w;
            ++count;
        }
        EXPECT_EQ(last, DyckWord::blocks(n));
        EXPECT_EQ(count, oracle::catalan_closed_form(n)) << "n=" << n;
        EXPECT_FALSE(stream.next());
    }
}

TEST(Generate, SixRangeHas132Words) {
    std::size_t count = 0;
    for ([[maybe_unused]] const auto& w : generate(6))
        ++count;
    EXPECT_EQ(count, 132u);
}

TEST(Generate, ZeroIsRejected) {
    EXPECT_THROW(generate(0), DomainError);
}

TEST(Generate, PositionConditionAndRoundTrip) {
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const auto& w : generate(n)) {
            const auto r = w.close_positions();
            ASSERT_EQ(r.size(), n);
            for (std::size_t i = 1; i <= n; ++i) {
                ASSERT_LE(2 * i, r[i - 1]);
                ASSERT_LE(r[i - 1], n + i);
            }
            ASSERT_EQ(DyckWord::parse(w.str()), w);
        }
    }
}

TEST(Navigate, Examples) {
    const auto p = [](std::string_view s) { return DyckWord::parse(s); };
    EXPECT_EQ(successor(p("()")).str(), "(())");
    EXPECT_EQ(successor(p("((()))")).str(), "(()())");
    EXPECT_EQ(successor(p("()()")).str(), "((()))");
    EXPECT_EQ(predecessor(p("(())"))->str(), "()");
    EXPECT_FALSE(predecessor(p("()")));
    EXPECT_EQ(predecessor(p("(()())"))->str(), "((()))");
}

TEST(Navigate, ConsecutiveGeneratedWords) {
    for (std::size_t n = 1; n <= 9; ++n) {
        std::optional<DyckWord> prev;
        for (const auto& w : generate(n)) {
            if (prev) {
                ASSERT_EQ(successor(*prev), w);
                ASSERT_EQ(predecessor(w), prev);
            }
            prev = w;
        }
        // Crossing into the next range.
        EXPECT_EQ(successor(*prev), DyckWord::single_block(n + 1));
        EXPECT_EQ(predecessor(DyckWord::single_block(n + 1)), prev);
    }
}

TEST(Navigate, RandomLongWordsStepBothWays) {
    std::mt19937_64 rng(20191);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 20 + static_cast<std::size_t>(rng() % 40);
        // Random walk kept valid step by step.
        std::vector<Symbol> s;
        std::size_t opens = 0, closes = 0;
        while (s.size() < 2 * n) {
            const bool can_open = opens < n;
            const bool can_close = closes < opens;
            const bool open = can_open && (!can_close || rng() % 2 == 0);
            s.push_back(open ? Symbol::Open : Symbol::Close);
            (open ? opens : closes)++;
        }
        const auto w = DyckWord::from_symbols(s);
        const auto next = successor(w);
        ASSERT_EQ(compare_lex(w, next), std::strong_ordering::less);
        ASSERT_EQ(predecessor(next), w);
    }
}

} // namespace
} // namespace dyck
