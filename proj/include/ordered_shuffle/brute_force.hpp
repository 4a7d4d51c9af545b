#pragma once

// Exhaustive oracles. Every deck over a j-letter alphabet is visited, so these
// are only usable at small N; the enumeration budget bounds j^N.

#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "deck.hpp"
#include "errors.hpp"
#include "params.hpp"
#include "shuffle.hpp"

namespace ordered_shuffle {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Bijection between j-ary decks of length N and [0, j^N). Index order is
/// lexicographic deck order.
class DeckSpace {
public:
    DeckSpace(std::size_t length, std::size_t alphabet, std::uint64_t budget = kDefaultBudget)
        : length_(length), alphabet_(alphabet) {
        if (alphabet == 0) throw input_error("alphabet size must be at least 1");
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < length; ++i) {
            if (__builtin_mul_overflow(total, alphabet, &total))
                throw budget_exceeded("deck space j^N overflows 64 bits", std::numeric_limits<std::uint64_t>::max(),
                                      budget);
        }
        if (total > budget) throw budget_exceeded("deck space j^N exceeds the enumeration budget", total, budget);
        if (total > std::numeric_limits<std::uint32_t>::max())
            throw budget_exceeded("deck space j^N exceeds 32-bit state indices", total,
                                  std::numeric_limits<std::uint32_t>::max());
        size_ = total;
    }

    std::uint64_t size() const { return size_; }
    std::size_t length() const { return length_; }
    std::size_t alphabet() const { return alphabet_; }

    void decode(std::uint64_t index, Deck& out) const {
        out.resize(length_);
        for (std::size_t i = length_; i-- > 0;) {
            out[i] = static_cast<Label>(index % alphabet_);
            index /= alphabet_;
        }
    }

    Deck decode(std::uint64_t index) const {
        Deck d;
        decode(index, d);
        return d;
    }

    std::uint64_t encode(const Deck& deck) const {
        std::uint64_t index = 0;
        for (Label x : deck) index = index * alphabet_ + x;
        return index;
    }

private:
    std::size_t length_;
    std::size_t alphabet_;
    std::uint64_t size_ = 0;
};

/// The full shuffle digraph on j^N decks, with settle time and eventual period of
/// every state.
struct StateGraph {
    ShuffleParams params;
    DeckSpace space;
    std::vector<std::uint32_t> next;
    std::vector<std::uint32_t> settle;
    std::vector<std::uint32_t> period;
};

inline StateGraph explore_states(const ShuffleParams& params, std::size_t alphabet,
                                 std::uint64_t budget = kDefaultBudget) {
    StateGraph g{params, DeckSpace(params.N, alphabet, budget), {}, {}, {}};
    const std::uint64_t total = g.space.size();
    g.next.resize(total);
    Deck deck;
    for (std::uint64_t s = 0; s < total; ++s) {
        g.space.decode(s, deck);
        g.next[s] = static_cast<std::uint32_t>(g.space.encode(shuffle_once(deck, params)));
    }

    constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
    constexpr std::uint32_t on_path = unseen - 1;
    g.settle.assign(total, unseen);
    g.period.assign(total, 0);
    std::vector<std::uint32_t> path;
    for (std::uint64_t s = 0; s < total; ++s) {
        if (g.settle[s] != unseen) continue;
        path.clear();
        auto x = static_cast<std::uint32_t>(s);
        while (g.settle[x] == unseen) {
            g.settle[x] = on_path;
            path.push_back(x);
            x = g.next[x];
        }
        if (g.settle[x] == on_path) {
            std::size_t pos = path.size();
            while (path[pos - 1] != x) --pos;
            --pos;
            const auto len = static_cast<std::uint32_t>(path.size() - pos);
            for (std::size_t i = pos; i < path.size(); ++i) {
                g.settle[path[i]] = 0;
                g.period[path[i]] = len;
            }
            path.resize(pos);
        }
        for (std::size_t i = path.size(); i-- > 0;) {
            const std::uint32_t y = path[i];
            g.settle[y] = g.settle[g.next[y]] + 1;
            g.period[y] = g.period[g.next[y]];
        }
    }
    return g;
}

/// {d : shuffle_once(d) = d}, lexicographically sorted.
inline std::vector<Deck> brute_force_fixed_decks(const ShuffleParams& params, std::size_t alphabet,
                                                 std::uint64_t budget = kDefaultBudget) {
    const DeckSpace space(params.N, alphabet, budget);
    std::vector<Deck> out;
    Deck deck;
    for (std::uint64_t s = 0; s < space.size(); ++s) {
        space.decode(s, deck);
        if (shuffle_once(deck, params) == deck) out.push_back(deck);
    }
    return out;
}

/// {d : d lies on its own shuffle cycle}, lexicographically sorted.
inline std::vector<Deck> periodic_decks(const StateGraph& g) {
    std::vector<Deck> out;
    for (std::uint64_t s = 0; s < g.space.size(); ++s)
        if (g.settle[s] == 0) out.push_back(g.space.decode(s));
    return out;
}

inline std::vector<Deck> brute_force_periodic_decks(const ShuffleParams& params, std::size_t alphabet,
                                                    std::uint64_t budget = kDefaultBudget) {
    return periodic_decks(explore_states(params, alphabet, budget));
}

/// Every period realised by some deck of the state graph.
inline std::set<std::uint32_t> observed_periods(const StateGraph& g) {
    std::set<std::uint32_t> out;
    for (std::uint64_t s = 0; s < g.space.size(); ++s)
        if (g.settle[s] == 0) out.insert(g.period[s]);
    return out;
}

/// Largest settle time, with the lexicographically first deck attaining it.
inline std::pair<std::size_t, Deck> max_settle(const StateGraph& g) {
    std::uint64_t best = 0;
    for (std::uint64_t s = 1; s < g.space.size(); ++s)
        if (g.settle[s] > g.settle[best]) best = s;
    return {g.settle[best], g.space.decode(best)};
}

inline std::pair<std::size_t, Deck> max_settle(const ShuffleParams& params, std::size_t alphabet,
                                               std::uint64_t budget = kDefaultBudget) {
    return max_settle(explore_states(params, alphabet, budget));
}

} // namespace ordered_shuffle
