#pragma once

// Graphviz export. Nodes are ranked by weight level with the lowest level at the
// bottom; node and edge order is fixed so identical posets give identical text.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "poset.hpp"

namespace ordered_shuffle {

namespace detail {

inline std::string join_members(const std::vector<std::size_t>& members) {
    std::string s;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i != 0) s += ' ';
        s += std::to_string(members[i]);
    }
    return s;
}

inline void write_ranks(std::ostringstream& out, const std::map<Weight, std::vector<std::size_t>>& by_level,
                        const char* prefix) {
    for (const auto& [level, nodes] : by_level) {
        out << "  { rank=same; ";
        for (std::size_t v : nodes) out << prefix << v << "; ";
        out << "}\n";
    }
}

} // namespace detail

/// Subscripts as nodes; solid edges follow `successor` inside a level, dashed
/// undirected edges join subscripts sharing a column.
inline std::string to_dot(const ShufflingPoset& poset) {
    std::ostringstream out;
    out << "digraph shuffling_poset {\n  rankdir=BT;\n  node [shape=circle];\n";
    std::map<Weight, std::vector<std::size_t>> by_level;
    for (std::size_t a = 0; a < poset.params.N; ++a) {
        by_level[poset.wf(a)].push_back(a);
        out << "  s" << a << " [label=\"" << a << "\"];\n";
    }
    detail::write_ranks(out, by_level, "s");
    for (std::size_t a = 0; a < poset.params.N; ++a)
        out << "  s" << a << " -> s" << poset.successor[a] << " [constraint=false];\n";
    for (const auto& [x, y] : poset.column_edges) {
        const bool x_low = poset.wf(x) < poset.wf(y);
        out << "  s" << (x_low ? x : y) << " -> s" << (x_low ? y : x) << " [style=dashed, dir=none];\n";
    }
    out << "}\n";
    return out.str();
}

/// Fixed or periodic poset: one node per label-carrying element, labelled with
/// its member subscripts; edges point from the lower-weight end to the higher.
inline std::string to_dot(const LabelPoset& poset, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
    std::map<Weight, std::vector<std::size_t>> by_level;
    for (std::size_t v = 0; v < poset.size(); ++v) {
        by_level[poset.level[v]].push_back(v);
        out << "  v" << v << " [label=\"" << detail::join_members(poset.members[v]) << "\"];\n";
    }
    detail::write_ranks(out, by_level, "v");
    for (const CoverEdge& e : poset.edges) out << "  v" << e.low << " -> v" << e.high << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const FixedPoset& fp) { return to_dot(fp, "fixed_poset"); }
inline std::string to_dot(const PeriodicPoset& pp) { return to_dot(pp, "periodic_poset"); }

} // namespace ordered_shuffle
