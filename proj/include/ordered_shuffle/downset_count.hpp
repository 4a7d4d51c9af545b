#pragma once

// Counting monotone labellings of a leveled constraint poset without
// enumerating them.
//
// Two labels: a labelling is the set S of nodes labelled 1, and admissibility
// says S is closed under high -> low, i.e. S is a down-set. The count is taken
// by a transfer-matrix sweep over the levels, bottom to top. The state is the
// restriction of S to the "frontier": already-processed nodes that still have
// an upper neighbour ahead. States are dense bitmask-indexed arrays.
//
// For one layer L the sweep
//   1. sum out frontier nodes whose last upper neighbour is in L, as a
//      superset-sum (zeta transform) over their bits, so that
//      g[P-part | need] = number of partial down-sets containing `need`;
//   2. for every subset T of layer L, reads g at the lower neighbours of T and
//      adds it into the new state (P-part, T restricted to nodes still needed).
//
// j labels reduce to two: a labelling is the chain D_{j-1} <= ... <= D_1 of
// down-sets D_c = {label >= c}, which is one down-set of the product with a
// (j-1)-chain.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "poset.hpp"

namespace ordered_shuffle {

using BigCount = boost::multiprecision::cpp_int;

/// Largest dense state array (entries) the counter will allocate.
inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 28;

namespace detail {

template <class Count>
inline bool add_into(Count& acc, const Count& x) {
    if constexpr (std::is_integral_v<Count>) {
        return !__builtin_add_overflow(acc, x, &acc);
    } else {
        acc += x;
        return true;
    }
}

// Returns nullopt when Count overflows.
template <class Count>
std::optional<Count> count_downsets_as(const std::vector<Weight>& level, const std::vector<CoverEdge>& edges,
                                       std::uint64_t max_states) {
    const std::size_t V = level.size();
    std::vector<Weight> keys(level);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::size_t> layer_of(V);
    std::vector<std::vector<std::size_t>> layers(keys.size());
    for (std::size_t v = 0; v < V; ++v) {
        layer_of[v] = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), level[v]) - keys.begin());
        layers[layer_of[v]].push_back(v);
    }

    std::vector<std::vector<std::size_t>> lowers(V);
    std::vector<long> last_upper(V, -1);
    for (const CoverEdge& e : edges) {
        if (layer_of[e.low] >= layer_of[e.high])
            throw std::logic_error("constraint edge does not go down a level");
        lowers[e.high].push_back(e.low);
        last_upper[e.low] = std::max(last_upper[e.low], static_cast<long>(layer_of[e.high]));
    }

    auto check_bits = [&](std::size_t bits, const char* what) {
        if (bits >= 63 || (std::uint64_t{1} << bits) > max_states)
            throw budget_exceeded(std::string("down-set counter: ") + what + " too wide",
                                  bits >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits), max_states);
    };

    std::vector<std::size_t> frontier;
    std::vector<Count> cnt(1, Count(1));
    std::vector<long> pos(V, -1);

    for (std::size_t L = 0; L < layers.size(); ++L) {
        // Split the frontier into nodes still needed after L (P) and the rest (D).
        std::vector<std::size_t> P, D;
        for (std::size_t f : frontier) (last_upper[f] > static_cast<long>(L) ? P : D).push_back(f);
        const std::size_t p = P.size(), d = D.size();

        std::vector<std::size_t> order(P);
        order.insert(order.end(), D.begin(), D.end());
        if (order != frontier) {
            // Permute state bits into (P, D) order.
            std::vector<std::size_t> new_bit(frontier.size());
            for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<long>(i);
            for (std::size_t i = 0; i < frontier.size(); ++i) new_bit[i] = static_cast<std::size_t>(pos[frontier[i]]);
            std::vector<Count> permuted(cnt.size());
            for (std::uint64_t idx = 0; idx < cnt.size(); ++idx) {
                std::uint64_t to = 0;
                for (std::size_t i = 0; i < frontier.size(); ++i)
                    if (idx >> i & 1U) to |= std::uint64_t{1} << new_bit[i];
                permuted[to] = std::move(cnt[idx]);
            }
            cnt = std::move(permuted);
        }
        for (std::size_t i = 0; i < p; ++i) pos[P[i]] = static_cast<long>(i);
        for (std::size_t i = 0; i < d; ++i) pos[D[i]] = static_cast<long>(i);

        // Superset sums over the D bits.
        for (std::size_t b = p; b < p + d; ++b) {
            const std::uint64_t bit = std::uint64_t{1} << b;
            for (std::uint64_t idx = 0; idx < cnt.size(); ++idx)
                if (!(idx & bit) && !add_into(cnt[idx], cnt[idx | bit])) return std::nullopt;
        }

        // Layer nodes: those with upper neighbours first.
        std::vector<std::size_t> nodes = layers[L];
        std::stable_partition(nodes.begin(), nodes.end(), [&](std::size_t v) { return last_upper[v] >= 0; });
        const std::size_t m = nodes.size();
        const auto keep = static_cast<std::size_t>(
            std::count_if(nodes.begin(), nodes.end(), [&](std::size_t v) { return last_upper[v] >= 0; }));
        check_bits(m, "layer");
        check_bits(p + keep, "frontier");

        std::vector<std::uint64_t> needP(m, 0), needD(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t u : lowers[nodes[i]]) {
                const bool in_p = last_upper[u] > static_cast<long>(L);
                const auto at = pos[u];
                if (at < 0) throw std::logic_error("lower neighbour missing from frontier");
                (in_p ? needP[i] : needD[i]) |= std::uint64_t{1} << at;
            }
        }

        // Split lookup tables: requirement masks for any subset of the layer.
        const std::size_t lo_bits = m / 2, hi_bits = m - lo_bits;
        auto build = [](const std::vector<std::uint64_t>& need, std::size_t first, std::size_t bits) {
            std::vector<std::uint64_t> tab(std::size_t{1} << bits, 0);
            for (std::size_t s = 1; s < tab.size(); ++s) {
                const auto low = static_cast<std::size_t>(__builtin_ctzll(s));
                tab[s] = tab[s & (s - 1)] | need[first + low];
            }
            return tab;
        };
        const auto tabP_lo = build(needP, 0, lo_bits), tabP_hi = build(needP, lo_bits, hi_bits);
        const auto tabD_lo = build(needD, 0, lo_bits), tabD_hi = build(needD, lo_bits, hi_bits);
        const std::uint64_t lo_mask = (std::uint64_t{1} << lo_bits) - 1;
        const std::uint64_t keep_mask = (std::uint64_t{1} << keep) - 1;
        const std::uint64_t p_full = (std::uint64_t{1} << p) - 1;

        std::vector<Count> next(std::size_t{1} << (p + keep), Count(0));
        for (std::uint64_t T = 0; T < (std::uint64_t{1} << m); ++T) {
            const std::uint64_t lp = tabP_lo[T & lo_mask] | tabP_hi[T >> lo_bits];
            const std::uint64_t ld = tabD_lo[T & lo_mask] | tabD_hi[T >> lo_bits];
            const std::uint64_t dst = (T & keep_mask) << p;
            const std::uint64_t src = ld << p;
            // Every P-part containing lp.
            for (std::uint64_t sp = lp;; sp = ((sp + 1) | lp) & p_full) {
                if (!add_into(next[dst | sp], cnt[src | sp])) return std::nullopt;
                if (sp == p_full) break;
            }
        }

        frontier = P;
        frontier.insert(frontier.end(), nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(keep));
        cnt = std::move(next);
    }
    if (!frontier.empty()) throw std::logic_error("frontier not drained");
    return cnt[0];
}

} // namespace detail

/// Number of subsets closed under high -> low along `edges`.
inline BigCount count_downsets(const std::vector<Weight>& level, const std::vector<CoverEdge>& edges,
                               std::uint64_t max_states = kDefaultMaxStates) {
    if (auto c = detail::count_downsets_as<std::uint32_t>(level, edges, max_states)) return BigCount(*c);
    if (auto c = detail::count_downsets_as<std::uint64_t>(level, edges, max_states)) return BigCount(*c);
    return *detail::count_downsets_as<BigCount>(level, edges, max_states);
}

/// Level and edge lists of the poset times a (j-1)-chain; its down-sets are the
/// j-label monotone labellings of `poset`. Node (v, c) has id v*(j-1) + c-1.
inline std::pair<std::vector<Weight>, std::vector<CoverEdge>> chain_product(const LabelPoset& poset,
                                                                             std::size_t alphabet) {
    const std::size_t copies = alphabet - 1;
    std::vector<Weight> keys(poset.level);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Weight> level(poset.size() * copies);
    std::vector<CoverEdge> edges;
    auto id = [&](std::size_t v, std::size_t c) { return v * copies + (c - 1); };
    for (std::size_t v = 0; v < poset.size(); ++v) {
        const auto rank = std::lower_bound(keys.begin(), keys.end(), poset.level[v]) - keys.begin();
        for (std::size_t c = 1; c <= copies; ++c) {
            level[id(v, c)] = static_cast<Weight>(rank) * static_cast<Weight>(copies) + static_cast<Weight>(c - 1);
            if (c > 1) edges.push_back({id(v, c), id(v, c - 1)});
        }
    }
    for (const CoverEdge& e : poset.edges)
        for (std::size_t c = 1; c <= copies; ++c) edges.push_back({id(e.high, c), id(e.low, c)});
    return {std::move(level), std::move(edges)};
}

inline BigCount count_monotone_labelings(const LabelPoset& poset, std::size_t alphabet,
                                         std::uint64_t max_states = kDefaultMaxStates) {
    if (alphabet == 0) throw input_error("alphabet size must be at least 1");
    if (alphabet == 1) return 1;
    if (alphabet == 2) return count_downsets(poset.level, poset.edges, max_states);
    auto [level, edges] = chain_product(poset, alphabet);
    return count_downsets(level, edges, max_states);
}

/// Number of decks over `alphabet` labels left unchanged by one shuffle.
inline BigCount count_fixed(const FixedPoset& fp, std::size_t alphabet,
                            std::uint64_t max_states = kDefaultMaxStates) {
    return count_monotone_labelings(fp, alphabet, max_states);
}

inline BigCount count_periodic(const PeriodicPoset& pp, std::size_t alphabet,
                               std::uint64_t max_states = kDefaultMaxStates) {
    return count_monotone_labelings(pp, alphabet, max_states);
}

} // namespace ordered_shuffle
