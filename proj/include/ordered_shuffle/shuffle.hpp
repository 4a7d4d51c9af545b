#pragma once

// The ordered-card shuffle and single-deck orbit detection.
//
// The deck fills a k x n matrix row by row. Every column is sorted so the
// largest label is on top, and the columns are concatenated left to right,
// each read top to bottom. Column l = {l, l+n, ..., l+(k-1)n} therefore lands
// in block {kl, ..., kl+k-1} of the new deck.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "deck.hpp"
#include "params.hpp"

namespace ordered_shuffle {

/// How cards with equal labels are ordered inside a column. The resulting deck
/// is the same either way; only card identity differs.
enum class TieRule {
    stable,  // top stack first
    reversed // bottom stack first
};

/// dest[A] = position that the card at A occupies after one shuffle.
inline std::vector<std::size_t> shuffle_destinations(const Deck& deck, const ShuffleParams& params,
                                                     TieRule rule = TieRule::stable) {
    require_deck(deck, params);
    const std::size_t k = params.k, n = params.n;
    std::vector<std::size_t> dest(params.N);
    std::vector<std::size_t> rows(k);
    for (std::size_t col = 0; col < n; ++col) {
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        if (rule == TieRule::reversed) std::reverse(rows.begin(), rows.end());
        std::stable_sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
            return deck[col + a * n] > deck[col + b * n];
        });
        for (std::size_t r = 0; r < k; ++r) dest[col + rows[r] * n] = k * col + r;
    }
    return dest;
}

inline Deck apply_destinations(const Deck& deck, const std::vector<std::size_t>& dest) {
    Deck out(deck.size());
    for (std::size_t a = 0; a < deck.size(); ++a) out[dest[a]] = deck[a];
    return out;
}

inline Deck shuffle_once(const Deck& deck, const ShuffleParams& params) {
    require_deck(deck, params);
    const std::size_t k = params.k, n = params.n;
    Deck out(params.N);
    for (std::size_t col = 0; col < n; ++col) {
        auto block = out.begin() + static_cast<std::ptrdiff_t>(k * col);
        for (std::size_t r = 0; r < k; ++r) block[static_cast<std::ptrdiff_t>(r)] = deck[col + r * n];
        std::sort(block, block + static_cast<std::ptrdiff_t>(k), std::greater<>());
    }
    return out;
}

inline Deck shuffle_times(Deck deck, const ShuffleParams& params, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) deck = shuffle_once(deck, params);
    return deck;
}

struct Orbit {
    std::size_t settle = 0;       // shuffles before the deck first enters its cycle
    std::size_t period = 0;       // length of that cycle
    std::vector<Deck> cycle_decks; // the cycle in shuffle order, starting at the entry deck

    bool operator==(const Orbit&) const = default;
};

struct DeckHash {
    std::size_t operator()(const Deck& deck) const noexcept {
        return boost::hash_range(deck.begin(), deck.end());
    }
};

inline Orbit find_orbit(const Deck& start, const ShuffleParams& params) {
    require_deck(start, params);
    std::unordered_map<Deck, std::size_t, DeckHash> seen;
    std::vector<Deck> trail;
    Deck current = start;
    for (std::size_t step = 0;; ++step) {
        auto [it, inserted] = seen.emplace(current, step);
        if (!inserted) {
            Orbit orbit;
            orbit.settle = it->second;
            orbit.period = step - it->second;
            orbit.cycle_decks.assign(trail.begin() + static_cast<std::ptrdiff_t>(orbit.settle), trail.end());
            return orbit;
        }
        trail.push_back(current);
        current = shuffle_once(current, params);
    }
}

} // namespace ordered_shuffle
