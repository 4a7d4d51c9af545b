#pragma once

// Streams the admissible labellings of a fixed or periodic poset as decks, in
// lexicographic deck order.
//
// Deck positions are scanned left to right; a node receives its label the first
// time one of its subscripts is reached, so trying labels in increasing order
// yields lexicographic output. Each choice is checked against the transitive
// closure of the constraints, which makes every consistent partial labelling
// extendable and the search backtrack-free on dead ends.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "deck.hpp"
#include "errors.hpp"
#include "poset.hpp"

namespace ordered_shuffle {

/// Return false to stop the stream.
using DeckVisitor = std::function<bool(const Deck&)>;

namespace detail {

class LabelingSearch {
public:
    LabelingSearch(const LabelPoset& poset, std::size_t alphabet, const DeckVisitor& visit)
        : poset_(poset), alphabet_(alphabet), visit_(visit), below_(poset.size(), boost::dynamic_bitset<>(poset.size())),
          labels_(poset.size(), 0), assigned_(poset.size(), false), node_at_(poset.params.N),
          deck_(poset.params.N, 0) {
        for (std::size_t v = 0; v < poset.size(); ++v)
            for (std::size_t a : poset.members[v]) node_at_[a] = v;
        close_constraints();
    }

    void run() { step(0); }

private:
    // below_[v] = nodes that must carry a label >= label(v).
    void close_constraints() {
        std::vector<std::size_t> order(poset_.size());
        for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return poset_.level[a] < poset_.level[b]; });
        std::vector<std::vector<std::size_t>> lowers(poset_.size());
        for (const CoverEdge& e : poset_.edges) lowers[e.high].push_back(e.low);
        for (std::size_t v : order) {
            for (std::size_t u : lowers[v]) {
                below_[v] |= below_[u];
                below_[v].set(u);
            }
        }
    }

    bool step(std::size_t position) {
        if (position == deck_.size()) return visit_(deck_);
        const std::size_t v = node_at_[position];
        if (assigned_[v]) {
            deck_[position] = labels_[v];
            return step(position + 1);
        }
        Label lo = 0, hi = static_cast<Label>(alphabet_ - 1);
        for (std::size_t u = 0; u < poset_.size(); ++u) {
            if (!assigned_[u]) continue;
            if (below_[v].test(u)) hi = std::min(hi, labels_[u]);
            if (below_[u].test(v)) lo = std::max(lo, labels_[u]);
        }
        assigned_[v] = true;
        for (Label x = lo; x <= hi; ++x) {
            labels_[v] = x;
            deck_[position] = x;
            if (!step(position + 1)) {
                assigned_[v] = false;
                return false;
            }
        }
        assigned_[v] = false;
        return true;
    }

    const LabelPoset& poset_;
    std::size_t alphabet_;
    const DeckVisitor& visit_;
    std::vector<boost::dynamic_bitset<>> below_;
    std::vector<Label> labels_;
    std::vector<bool> assigned_;
    std::vector<std::size_t> node_at_;
    Deck deck_;
};

} // namespace detail

inline void enumerate_labelings(const LabelPoset& poset, std::size_t alphabet, const DeckVisitor& visit) {
    if (alphabet == 0) throw input_error("alphabet size must be at least 1");
    detail::LabelingSearch(poset, alphabet, visit).run();
}

/// Shuffle-fixed decks over `alphabet` labels.
inline void enumerate_fixed(const FixedPoset& fp, std::size_t alphabet, const DeckVisitor& visit) {
    enumerate_labelings(fp, alphabet, visit);
}

/// Decks that lie on their own shuffle cycle.
inline void enumerate_periodic(const PeriodicPoset& pp, std::size_t alphabet, const DeckVisitor& visit) {
    enumerate_labelings(pp, alphabet, visit);
}

inline std::vector<Deck> collect_labelings(const LabelPoset& poset, std::size_t alphabet) {
    std::vector<Deck> out;
    enumerate_labelings(poset, alphabet, [&](const Deck& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

} // namespace ordered_shuffle
