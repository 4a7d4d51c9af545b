#pragma once

// Shuffling, fixed and periodic posets.
//
// A weight function turns the column -> block move into a bijection on
// subscripts (`successor`) that preserves weight; its orbits are the cycles,
// each living on one weight level. The remaining half of a shuffle is the sort
// inside each column, where the highest label settles on the lowest weight.
//
// Constraint edges in the fixed and periodic posets are stored as
// (high, low) pairs: a labelling is admissible when
//     label(low) >= label(high),
// i.e. heavier cards sit at lower weight.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "deck.hpp"
#include "errors.hpp"
#include "number_theory.hpp"
#include "params.hpp"
#include "weight.hpp"

namespace ordered_shuffle {

struct ShuffleCycle {
    Weight level = 0;
    std::vector<std::size_t> members; // successor order, starting at the smallest subscript
};

struct ShufflingPoset {
    ShuffleParams params;
    WeightFunction wf;
    std::vector<std::size_t> successor;
    std::vector<std::size_t> predecessor;
    std::vector<ShuffleCycle> cycles; // sorted by (level, smallest member)
    std::vector<std::size_t> cycle_of;
    std::vector<std::pair<std::size_t, std::size_t>> column_edges; // every same-column pair, (smaller, larger)

    /// Members of column l, sorted by increasing weight.
    std::vector<std::size_t> column_by_weight(std::size_t l) const {
        std::vector<std::size_t> col(params.k);
        for (std::size_t i = 0; i < params.k; ++i) col[i] = l + i * params.n;
        std::sort(col.begin(), col.end(), [&](std::size_t a, std::size_t b) { return wf(a) < wf(b); });
        return col;
    }
};

inline ShufflingPoset build_shuffling_poset(const WeightFunction& wf) {
    const ShuffleParams& p = wf.params();
    ShufflingPoset poset{p, wf, std::vector<std::size_t>(p.N), std::vector<std::size_t>(p.N), {}, {}, {}};

    std::map<Weight, std::size_t> block;
    for (std::size_t l = 0; l < p.n; ++l) {
        block.clear();
        for (std::size_t i = 0; i < p.k; ++i) block.emplace(wf(p.k * l + i), p.k * l + i);
        for (std::size_t i = 0; i < p.k; ++i) {
            const std::size_t a = l + i * p.n;
            const std::size_t b = block.at(wf(a));
            poset.successor[a] = b;
            poset.predecessor[b] = a;
        }
        for (std::size_t i = 0; i < p.k; ++i)
            for (std::size_t j = i + 1; j < p.k; ++j) poset.column_edges.emplace_back(l + i * p.n, l + j * p.n);
    }
    std::sort(poset.column_edges.begin(), poset.column_edges.end());

    std::vector<bool> seen(p.N, false);
    for (std::size_t a = 0; a < p.N; ++a) {
        if (seen[a]) continue;
        ShuffleCycle c;
        c.level = wf(a);
        for (std::size_t x = a; !seen[x]; x = poset.successor[x]) {
            seen[x] = true;
            c.members.push_back(x);
        }
        poset.cycles.push_back(std::move(c));
    }
    std::stable_sort(poset.cycles.begin(), poset.cycles.end(),
                     [](const ShuffleCycle& a, const ShuffleCycle& b) { return a.level < b.level; });
    poset.cycle_of.resize(p.N);
    for (std::size_t c = 0; c < poset.cycles.size(); ++c)
        for (std::size_t a : poset.cycles[c].members) poset.cycle_of[a] = c;
    return poset;
}

/// A -> k*A + A_{t-1} (mod N), the successor under the base-k weight. Needs gcd(q, k) = 1.
inline std::size_t mapping_rule_gcd1(std::size_t a, const ShuffleParams& params) {
    if (!params.coprime_cofactor()) throw precondition_error("mapping rule needs gcd(q, k) = 1");
    const auto digit = static_cast<std::size_t>(base_digit(a, params.k, params.t - 1));
    return static_cast<std::size_t>((static_cast<unsigned __int128>(params.k) * a + digit) % params.N);
}

/// Carries out one shuffle inside the poset: sort each column so that larger
/// labels take lower weights, then advance every card along `successor`.
inline Deck shuffle_in_poset(const Deck& deck, const ShufflingPoset& poset) {
    require_deck(deck, poset.params);
    Deck sorted = deck;
    std::vector<Label> labels(poset.params.k);
    for (std::size_t l = 0; l < poset.params.n; ++l) {
        const std::vector<std::size_t> col = poset.column_by_weight(l);
        for (std::size_t i = 0; i < col.size(); ++i) labels[i] = deck[col[i]];
        std::sort(labels.begin(), labels.end(), std::greater<>());
        for (std::size_t i = 0; i < col.size(); ++i) sorted[col[i]] = labels[i];
    }
    Deck out(deck.size());
    for (std::size_t a = 0; a < deck.size(); ++a) out[poset.successor[a]] = sorted[a];
    return out;
}

inline bool complement_symmetry_check(const ShufflingPoset& poset) {
    const std::size_t N = poset.params.N;
    for (std::size_t i = 0; i < N; ++i)
        if (poset.successor[N - 1 - i] != N - 1 - poset.successor[i]) return false;
    return true;
}

struct CycleStats {
    std::map<std::size_t, std::size_t> histogram; // cycle length -> number of cycles
    std::uint64_t lcm = 1;
    std::size_t max_length = 0;

    bool lcm_equals_max() const { return lcm == max_length; }
};

inline CycleStats cycle_length_stats(const ShufflingPoset& poset) {
    CycleStats s;
    for (const ShuffleCycle& c : poset.cycles) {
        ++s.histogram[c.members.size()];
        s.lcm = checked_lcm(s.lcm, c.members.size());
        s.max_length = std::max(s.max_length, c.members.size());
    }
    return s;
}

inline std::size_t cycle_length_of(const ShufflingPoset& poset, std::size_t subscript) {
    return poset.cycles[poset.cycle_of[subscript]].members.size();
}

struct CycleTheoremReport {
    ShuffleParams params;
    std::uint64_t order = 0; // ord_k(N - q)
    std::map<std::size_t, std::size_t> histogram;
    bool lengths_divide_order = false;
    bool order_attained = false;
    bool t_divides_order = false;

    bool pass() const { return lengths_divide_order && order_attained && t_divides_order; }
};

/// Checks, on the base-k shuffling poset, that every cycle length divides
/// ord_k(N - q), that some cycle has exactly that length, and that t divides it.
inline CycleTheoremReport verify_cycle_theorem(const ShuffleParams& params) {
    if (!params.coprime_cofactor()) throw precondition_error("cycle theorem needs gcd(q, k) = 1");
    const ShufflingPoset poset = build_shuffling_poset(base_k_weight(params));
    CycleTheoremReport r;
    r.params = params;
    r.order = mult_order(params.k, params.N - params.q);
    r.histogram = cycle_length_stats(poset).histogram;
    r.lengths_divide_order = std::all_of(r.histogram.begin(), r.histogram.end(),
                                         [&](const auto& kv) { return r.order % kv.first == 0; });
    r.order_attained = r.histogram.count(r.order) != 0;
    r.t_divides_order = r.order % params.t == 0;
    return r;
}

/// Directed constraint: label(low) >= label(high); weight(low) < weight(high).
struct CoverEdge {
    std::size_t high = 0;
    std::size_t low = 0;

    auto operator<=>(const CoverEdge&) const = default;
};

/// Nodes carrying one label each, expanded onto the subscripts in `members`.
struct LabelPoset {
    ShuffleParams params;
    std::vector<Weight> level;
    std::vector<std::vector<std::size_t>> members;
    std::vector<CoverEdge> edges; // sorted, unique

    std::size_t size() const { return level.size(); }

    Deck expand(const std::vector<Label>& node_labels) const {
        Deck deck(params.N);
        for (std::size_t v = 0; v < size(); ++v)
            for (std::size_t a : members[v]) deck[a] = node_labels[v];
        return deck;
    }

    bool admissible(const std::vector<Label>& node_labels) const {
        return std::all_of(edges.begin(), edges.end(),
                           [&](const CoverEdge& e) { return node_labels[e.low] >= node_labels[e.high]; });
    }
};

/// Nodes are the shuffling-poset cycles (same order); its admissible labellings
/// are exactly the shuffle-fixed decks.
struct FixedPoset : LabelPoset {};

/// Nodes are subscripts; its admissible labellings are exactly the decks that
/// already lie on their shuffle cycle.
struct PeriodicPoset : LabelPoset {};

namespace detail {

inline void sort_unique(std::vector<CoverEdge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

} // namespace detail

/// Weight-adjacent pairs inside each column, as (high, low) subscripts.
inline std::vector<CoverEdge> column_cover_pairs(const ShufflingPoset& poset) {
    std::vector<CoverEdge> out;
    for (std::size_t l = 0; l < poset.params.n; ++l) {
        const std::vector<std::size_t> col = poset.column_by_weight(l);
        for (std::size_t i = 0; i + 1 < col.size(); ++i) out.push_back({col[i + 1], col[i]});
    }
    return out;
}

inline FixedPoset build_fixed_poset(const ShufflingPoset& poset) {
    FixedPoset fp;
    fp.params = poset.params;
    for (const ShuffleCycle& c : poset.cycles) {
        fp.level.push_back(c.level);
        fp.members.push_back(c.members);
    }
    for (const CoverEdge& e : column_cover_pairs(poset)) {
        const std::size_t hi = poset.cycle_of[e.high], lo = poset.cycle_of[e.low];
        if (hi != lo) fp.edges.push_back({hi, lo});
    }
    detail::sort_unique(fp.edges);
    return fp;
}

/// Edge (A, B) whenever successor^s(A) and successor^s(B) are weight-adjacent
/// in one column for some s >= 0. The pair of positions repeats after
/// lcm(|cycle(A)|, |cycle(B)|) steps, which bounds the search.
inline PeriodicPoset build_periodic_poset(const ShufflingPoset& poset) {
    PeriodicPoset pp;
    pp.params = poset.params;
    const std::size_t N = poset.params.N;
    pp.level.resize(N);
    pp.members.resize(N);
    for (std::size_t a = 0; a < N; ++a) {
        pp.level[a] = poset.wf(a);
        pp.members[a] = {a};
    }
    for (const CoverEdge& e : column_cover_pairs(poset)) {
        const std::uint64_t span = checked_lcm(cycle_length_of(poset, e.high), cycle_length_of(poset, e.low));
        std::size_t hi = e.high, lo = e.low;
        for (std::uint64_t s = 0; s < span; ++s) {
            pp.edges.push_back({hi, lo});
            hi = poset.predecessor[hi];
            lo = poset.predecessor[lo];
        }
    }
    detail::sort_unique(pp.edges);
    return pp;
}

} // namespace ordered_shuffle
