#pragma once

// Possible periods and explicit periodic witnesses.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "deck.hpp"
#include "errors.hpp"
#include "number_theory.hpp"
#include "poset.hpp"
#include "shuffle.hpp"

namespace ordered_shuffle {

/// Every period of a periodic deck divides the lcm of the shuffling-poset cycle lengths.
struct PeriodSet {
    std::uint64_t lcm_cycles = 1;
    std::vector<std::uint64_t> divisors;

    bool operator==(const PeriodSet&) const = default;
};

inline PeriodSet possible_periods(const ShufflingPoset& poset) {
    PeriodSet s;
    s.lcm_cycles = cycle_length_stats(poset).lcm;
    s.divisors = divisors(s.lcm_cycles);
    return s;
}

namespace detail {

// Two-label deck: 1 on the given seeds and on everything they constrain from
// below, 0 elsewhere. The result is admissible on `pp` by construction.
inline Deck down_closure_deck(const PeriodicPoset& pp, const std::vector<std::size_t>& seeds) {
    std::vector<std::vector<std::size_t>> lowers(pp.size());
    for (const CoverEdge& e : pp.edges) lowers[e.high].push_back(e.low);
    Deck deck(pp.params.N, 0);
    std::vector<std::size_t> stack(seeds);
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (deck[v] == 1) continue;
        deck[v] = 1;
        for (std::size_t u : lowers[v]) stack.push_back(u);
    }
    return deck;
}

// Marks every `period`-th member of a cycle (pattern 0^(period-1) 1 around it).
inline void mark_pattern(const ShuffleCycle& cycle, std::uint64_t period, std::vector<std::size_t>& seeds) {
    for (std::size_t i = 0; i < cycle.members.size(); ++i)
        if (i % period == period - 1) seeds.push_back(cycle.members[i]);
}

inline bool has_exact_period(const Deck& deck, const ShuffleParams& params, std::uint64_t period) {
    const Orbit orbit = find_orbit(deck, params);
    return orbit.settle == 0 && orbit.period == period;
}

} // namespace detail

/// A two-label deck that is periodic with period exactly `period`, verified by
/// simulation. Needs `period` to divide the lcm of the cycle lengths.
///
/// Seeds a rotation pattern of period `period` on one cycle whose length it
/// divides and closes downward in the periodic poset. Since the periodic poset
/// is invariant under `successor`, the closure rotates with the seeds, and a
/// cycle never constrains itself, so the pattern survives intact. When no single
/// cycle fits, the period is split into prime powers spread over several cycles.
inline Deck construct_period_stack(const ShufflingPoset& poset, const PeriodicPoset& pp, std::uint64_t period,
                                   std::size_t search_budget = 100000) {
    const std::uint64_t lcm = cycle_length_stats(poset).lcm;
    if (period == 0 || lcm % period != 0)
        throw precondition_error("period " + std::to_string(period) + " does not divide the cycle-length lcm " +
                                 std::to_string(lcm));

    for (const ShuffleCycle& c : poset.cycles) {
        if (c.members.size() % period != 0) continue;
        std::vector<std::size_t> seeds;
        detail::mark_pattern(c, period, seeds);
        Deck deck = detail::down_closure_deck(pp, seeds);
        if (detail::has_exact_period(deck, poset.params, period)) return deck;
    }

    // Prime-power split: pick one cycle per prime power and seed each with its own pattern.
    std::vector<std::uint64_t> parts;
    for (auto [p, e] : factorize(period)) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        parts.push_back(pe);
    }
    std::vector<std::vector<std::size_t>> candidates(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t c = 0; c < poset.cycles.size(); ++c)
            if (poset.cycles[c].members.size() % parts[i] == 0) candidates[i].push_back(c);

    std::vector<std::size_t> choice(parts.size(), 0);
    for (std::size_t tries = 0; tries < search_budget; ++tries) {
        std::vector<std::uint64_t> per_cycle(poset.cycles.size(), 1);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const std::size_t c = candidates[i][choice[i]];
            per_cycle[c] = checked_lcm(per_cycle[c], parts[i]);
        }
        std::vector<std::size_t> seeds;
        for (std::size_t c = 0; c < poset.cycles.size(); ++c)
            if (per_cycle[c] > 1) detail::mark_pattern(poset.cycles[c], per_cycle[c], seeds);
        Deck deck = detail::down_closure_deck(pp, seeds);
        if (detail::has_exact_period(deck, poset.params, period)) return deck;

        std::size_t i = 0;
        while (i < parts.size() && ++choice[i] == candidates[i].size()) choice[i++] = 0;
        if (i == parts.size()) break;
    }
    throw std::runtime_error("construct_period_stack: no deck of period " + std::to_string(period) +
                             " found; the construction is inconsistent with the poset");
}

} // namespace ordered_shuffle
