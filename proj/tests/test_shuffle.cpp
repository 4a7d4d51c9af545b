#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ordered_shuffle/shuffle.hpp"

using namespace ordered_shuffle;

TEST(MakeParams, Examples) {
    const ShuffleParams a = make_params(12, 3);
    EXPECT_EQ(a.t, 1U);
    EXPECT_EQ(a.q, 4U);
    EXPECT_EQ(a.n, 4U);

    const ShuffleParams b = make_params(32, 4);
    EXPECT_EQ(b.t, 2U);
    EXPECT_EQ(b.q, 2U);
    EXPECT_EQ(b.n, 8U);

    const ShuffleParams c = make_params(8, 8);
    EXPECT_EQ(c.t, 1U);
    EXPECT_EQ(c.q, 1U);
    EXPECT_EQ(c.n, 1U);
}

TEST(MakeParams, InvariantsHold) {
    for (std::size_t N = 1; N <= 300; ++N) {
        for (std::size_t k = 2; k <= N; ++k) {
            if (N % k != 0) continue;
            const ShuffleParams p = make_params(N, k);
            std::size_t kt = 1;
            for (unsigned i = 0; i < p.t; ++i) kt *= k;
            ASSERT_EQ(kt * p.q, N);
            ASSERT_NE(p.q % k, 0U);
            ASSERT_EQ(p.n * k, N);
            ASSERT_EQ(p.n, kt / k * p.q);
        }
    }
}

TEST(MakeParams, Rejections) {
    EXPECT_THROW(make_params(12, 1), input_error);
    EXPECT_THROW(make_params(12, 5), input_error);
    EXPECT_THROW(make_params(0, 2), input_error);
}

TEST(ShuffleOnce, FigureExample) {
    EXPECT_EQ(format_deck(shuffle_once(parse_deck("01211201"), make_params(8, 2))), "10212011");
}

TEST(ShuffleOnce, TwelveCardExample) {
    EXPECT_EQ(format_deck(shuffle_once(parse_deck("021100122110"), make_params(12, 3))), "200210111210");
}

TEST(ShuffleOnce, ConstantDeckIsInvariant) {
    EXPECT_EQ(shuffle_once(parse_deck("0000"), make_params(4, 2)), parse_deck("0000"));
}

TEST(ShuffleOnce, LengthMismatch) {
    EXPECT_THROW(shuffle_once(parse_deck("012"), make_params(4, 2)), input_error);
}

namespace {

Deck random_deck(std::mt19937& rng, std::size_t N, std::size_t alphabet) {
    std::uniform_int_distribution<Label> dist(0, static_cast<Label>(alphabet - 1));
    Deck d(N);
    for (Label& x : d) x = dist(rng);
    return d;
}

} // namespace

TEST(ShuffleProperties, PreservesMultisetOfLabels) {
    std::mt19937 rng(7);
    for (std::size_t N = 2; N <= 64; ++N) {
        for (std::size_t k = 2; k <= N; ++k) {
            if (N % k != 0) continue;
            const ShuffleParams p = make_params(N, k);
            for (int rep = 0; rep < 5; ++rep) {
                Deck d = random_deck(rng, N, 4);
                Deck s = shuffle_once(d, p);
                std::sort(d.begin(), d.end());
                std::sort(s.begin(), s.end());
                ASSERT_EQ(d, s);
            }
        }
    }
}

TEST(ShuffleProperties, TieBreakingDoesNotChangeTheDeck) {
    std::mt19937 rng(11);
    for (std::size_t N : {8, 12, 24, 36, 64}) {
        for (std::size_t k = 2; k <= N; ++k) {
            if (N % k != 0) continue;
            const ShuffleParams p = make_params(N, k);
            for (int rep = 0; rep < 20; ++rep) {
                const Deck d = random_deck(rng, N, 2);
                const auto stable = shuffle_destinations(d, p, TieRule::stable);
                const auto reversed = shuffle_destinations(d, p, TieRule::reversed);
                ASSERT_EQ(apply_destinations(d, stable), apply_destinations(d, reversed));
                ASSERT_EQ(apply_destinations(d, stable), shuffle_once(d, p));
            }
        }
    }
}

TEST(ShuffleProperties, StableTieRuleKeepsTopStackFirst) {
    // Column 0 of 0000 with k = 2: cards at 0 and 2 tie; the top stack's card leads.
    const auto dest = shuffle_destinations(parse_deck("0000"), make_params(4, 2));
    EXPECT_EQ(dest[0], 0U);
    EXPECT_EQ(dest[2], 1U);
    const auto rev = shuffle_destinations(parse_deck("0000"), make_params(4, 2), TieRule::reversed);
    EXPECT_EQ(rev[0], 1U);
    EXPECT_EQ(rev[2], 0U);
}

TEST(ShuffleProperties, SingleColumnSortsInOneStep) {
    std::mt19937 rng(3);
    for (std::size_t k = 2; k <= 10; ++k) {
        const ShuffleParams p = make_params(k, k);
        for (int rep = 0; rep < 10; ++rep) {
            Deck d = random_deck(rng, k, 5);
            Deck s = shuffle_once(d, p);
            std::sort(d.begin(), d.end(), std::greater<>());
            ASSERT_EQ(s, d);
            ASSERT_EQ(shuffle_once(s, p), s);
        }
    }
}

TEST(ShuffleProperties, CommutesWithReverseComplement) {
    std::mt19937 rng(5);
    for (std::size_t N : {6, 12, 24, 32}) {
        for (std::size_t k = 2; k <= N; ++k) {
            if (N % k != 0) continue;
            const ShuffleParams p = make_params(N, k);
            const Deck d = random_deck(rng, N, 3);
            ASSERT_EQ(shuffle_once(reverse_complement(d, 3), p), reverse_complement(shuffle_once(d, p), 3));
        }
    }
}

TEST(FindOrbit, TwelveCardExample) {
    const ShuffleParams p = make_params(12, 3);
    const Orbit o = find_orbit(parse_deck("021100122110"), p);
    EXPECT_EQ(o.settle, 1U);
    EXPECT_EQ(o.period, 2U);
    ASSERT_EQ(o.cycle_decks.size(), 2U);
    EXPECT_EQ(format_deck(o.cycle_decks[0]), "200210111210");
    EXPECT_EQ(format_deck(o.cycle_decks[1]), "211200110210");
}

TEST(FindOrbit, ConstantDeck) {
    const Orbit o = find_orbit(Deck(12, 1), make_params(12, 3));
    EXPECT_EQ(o.settle, 0U);
    EXPECT_EQ(o.period, 1U);
}

TEST(FindOrbit, CycleReproducesAndSettleIsMinimal) {
    std::mt19937 rng(13);
    for (std::size_t N : {8, 12, 18, 24}) {
        for (std::size_t k = 2; k <= N; ++k) {
            if (N % k != 0) continue;
            const ShuffleParams p = make_params(N, k);
            for (int rep = 0; rep < 10; ++rep) {
                const Deck d = random_deck(rng, N, 3);
                const Orbit o = find_orbit(d, p);
                ASSERT_EQ(o.cycle_decks.size(), o.period);
                for (std::size_t i = 0; i < o.period; ++i)
                    ASSERT_EQ(shuffle_once(o.cycle_decks[i], p), o.cycle_decks[(i + 1) % o.period]);
                ASSERT_EQ(shuffle_times(d, p, o.settle), o.cycle_decks[0]);
                // Before `settle` steps the deck is not yet on the cycle.
                for (std::size_t s = 0; s < o.settle; ++s) {
                    const Deck before = shuffle_times(d, p, s);
                    ASSERT_EQ(std::find(o.cycle_decks.begin(), o.cycle_decks.end(), before), o.cycle_decks.end());
                }
            }
        }
    }
}

TEST(DeckText, ParsingAndFormatting) {
    EXPECT_EQ(parse_deck("0121"), (Deck{0, 1, 2, 1}));
    EXPECT_EQ(parse_deck("10,0,3"), (Deck{10, 0, 3}));
    EXPECT_EQ(format_deck(Deck{10, 0, 3}), "10,0,3");
    EXPECT_EQ(format_deck(Deck{1, 0, 3}), "103");
    EXPECT_EQ(format_deck(Deck{1, 0, 3}, 12), "1,0,3");
    EXPECT_THROW(parse_deck("01a"), input_error);
    EXPECT_THROW(parse_deck(""), input_error);
    EXPECT_THROW(parse_deck("1,,2"), input_error);
}
