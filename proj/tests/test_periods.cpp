#include <gtest/gtest.h>

#include "ordered_shuffle/brute_force.hpp"
#include "ordered_shuffle/periods.hpp"

using namespace ordered_shuffle;

namespace {

ShufflingPoset poset_of(std::size_t N, std::size_t k) { return build_shuffling_poset(algorithm_up(make_params(N, k))); }

} // namespace

TEST(PossiblePeriods, SmallCases) {
    EXPECT_EQ(possible_periods(poset_of(12, 3)).divisors, (std::vector<std::uint64_t>{1, 2}));
    for (std::size_t k = 2; k <= 7; ++k) EXPECT_EQ(possible_periods(poset_of(k, k)).divisors, (std::vector<std::uint64_t>{1}));
    const PeriodSet s24 = possible_periods(poset_of(24, 2));
    EXPECT_EQ(s24.lcm_cycles, 6U);
    EXPECT_EQ(s24.divisors, (std::vector<std::uint64_t>{1, 2, 3, 6}));
}

TEST(PossiblePeriods, ContainObservedPeriods) {
    for (auto [N, k] : {std::pair{12, 3}, std::pair{12, 2}, std::pair{8, 2}, std::pair{9, 3}}) {
        const PeriodSet s = possible_periods(poset_of(N, k));
        for (std::uint32_t per : observed_periods(explore_states(make_params(N, k), 2)))
            EXPECT_EQ(s.lcm_cycles % per, 0U) << N << " " << k << " period " << per;
    }
}

TEST(ConstructPeriodStack, EveryDivisorIsRealised) {
    for (std::size_t N = 2; N <= 64; ++N) {
        for (std::size_t k = 2; k <= N; ++k) {
            if (N % k != 0) continue;
            const ShufflingPoset sp = poset_of(N, k);
            const PeriodicPoset pp = build_periodic_poset(sp);
            for (std::uint64_t d : possible_periods(sp).divisors) {
                const Deck deck = construct_period_stack(sp, pp, d);
                const Orbit o = find_orbit(deck, sp.params);
                ASSERT_EQ(o.settle, 0U) << N << " " << k << " d=" << d;
                ASSERT_EQ(o.period, d) << N << " " << k << " d=" << d;
                ASSERT_LE(max_label(deck), 1U);
            }
        }
    }
}

TEST(ConstructPeriodStack, RejectsNonDivisors) {
    const ShufflingPoset sp = poset_of(12, 3);
    const PeriodicPoset pp = build_periodic_poset(sp);
    EXPECT_THROW(construct_period_stack(sp, pp, 3), precondition_error);
    EXPECT_THROW(construct_period_stack(sp, pp, 0), precondition_error);
}
