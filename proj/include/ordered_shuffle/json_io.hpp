#pragma once

// Machine-readable documents. Every top-level document carries a `schema`
// string "ordered-shuffle/<kind>@1". Decks are stored in their text form and
// counts as decimal strings (they may exceed 64 bits).

#include <string>
#include <vector>

#include "json.hpp"

#include "deck.hpp"
#include "downset_count.hpp"
#include "params.hpp"
#include "periods.hpp"
#include "poset.hpp"
#include "shuffle.hpp"
#include "weight.hpp"

namespace ordered_shuffle {

using nlohmann::json;

inline std::string schema_name(const std::string& kind) { return "ordered-shuffle/" + kind + "@1"; }

inline void require_schema(const json& j, const std::string& kind) {
    if (j.at("schema").get<std::string>() != schema_name(kind))
        throw input_error("expected schema " + schema_name(kind) + ", got " + j.at("schema").dump());
}

inline void to_json(json& j, const ShuffleParams& p) {
    j = json{{"N", p.N}, {"k", p.k}, {"t", p.t}, {"q", p.q}, {"n", p.n}};
}

inline void from_json(const json& j, ShuffleParams& p) {
    p = make_params(j.at("N").get<std::size_t>(), j.at("k").get<std::size_t>());
}

inline json deck_list_json(const std::vector<Deck>& decks, std::size_t alphabet) {
    json arr = json::array();
    for (const Deck& d : decks) arr.push_back(format_deck(d, alphabet));
    return arr;
}

inline std::vector<Deck> deck_list_from_json(const json& arr) {
    std::vector<Deck> decks;
    for (const json& s : arr) decks.push_back(parse_deck(s.get<std::string>()));
    return decks;
}

inline json orbit_document(const ShuffleParams& p, const Deck& start, const Orbit& orbit) {
    const std::size_t alphabet = static_cast<std::size_t>(max_label(start)) + 1;
    return json{{"schema", schema_name("orbit")},
                {"params", p},
                {"start", format_deck(start, alphabet)},
                {"settle", orbit.settle},
                {"period", orbit.period},
                {"cycle", deck_list_json(orbit.cycle_decks, alphabet)}};
}

inline Orbit orbit_from_json(const json& j) {
    require_schema(j, "orbit");
    Orbit o;
    o.settle = j.at("settle").get<std::size_t>();
    o.period = j.at("period").get<std::size_t>();
    o.cycle_decks = deck_list_from_json(j.at("cycle"));
    return o;
}

inline json weight_document(const WeightFunction& wf, const std::string& method) {
    return json{{"schema", schema_name("weight")},
                {"params", wf.params()},
                {"method", method},
                {"values", wf.values()},
                {"symmetric", is_symmetric(wf)}};
}

/// Re-validates the values, so a tampered document is rejected.
inline WeightFunction weight_from_json(const json& j) {
    require_schema(j, "weight");
    return validate(j.at("values").get<std::vector<Weight>>(), j.at("params").get<ShuffleParams>());
}

inline json validation_document(const ShuffleParams& p, const WeightDiagnostic& d) {
    return json{{"schema", schema_name("weight-validation")},
                {"params", p},
                {"valid", d.ok()},
                {"condition", d.condition},
                {"column", d.column},
                {"message", d.ok() ? "valid shuffling weight function" : d.message}};
}

inline json label_poset_json(const LabelPoset& poset) {
    json nodes = json::array();
    for (std::size_t v = 0; v < poset.size(); ++v)
        nodes.push_back(json{{"id", v}, {"level", poset.level[v]}, {"members", poset.members[v]}});
    json edges = json::array();
    for (const CoverEdge& e : poset.edges) edges.push_back(json{{"high", e.high}, {"low", e.low}});
    return json{{"params", poset.params}, {"nodes", nodes}, {"edges", edges}};
}

inline LabelPoset label_poset_from_json(const json& j) {
    LabelPoset p;
    p.params = j.at("params").get<ShuffleParams>();
    for (const json& node : j.at("nodes")) {
        p.level.push_back(node.at("level").get<Weight>());
        p.members.push_back(node.at("members").get<std::vector<std::size_t>>());
    }
    for (const json& e : j.at("edges")) p.edges.push_back({e.at("high").get<std::size_t>(), e.at("low").get<std::size_t>()});
    return p;
}

inline json poset_document(const FixedPoset& fp, const std::string& method) {
    json j = label_poset_json(fp);
    j["schema"] = schema_name("fixed-poset");
    j["method"] = method;
    return j;
}

inline json poset_document(const PeriodicPoset& pp, const std::string& method) {
    json j = label_poset_json(pp);
    j["schema"] = schema_name("periodic-poset");
    j["method"] = method;
    return j;
}

inline json poset_document(const ShufflingPoset& sp, const std::string& method) {
    json cycles = json::array();
    for (const ShuffleCycle& c : sp.cycles) cycles.push_back(json{{"level", c.level}, {"members", c.members}});
    json column_edges = json::array();
    for (const auto& [a, b] : sp.column_edges) column_edges.push_back(json::array({a, b}));
    return json{{"schema", schema_name("shuffling-poset")},
                {"params", sp.params},
                {"method", method},
                {"weights", sp.wf.values()},
                {"successor", sp.successor},
                {"cycles", cycles},
                {"column_edges", column_edges}};
}

/// Rebuilds the poset from the stored weights and checks the stored successor.
inline ShufflingPoset shuffling_poset_from_json(const json& j) {
    require_schema(j, "shuffling-poset");
    ShufflingPoset sp = build_shuffling_poset(
        validate(j.at("weights").get<std::vector<Weight>>(), j.at("params").get<ShuffleParams>()));
    if (sp.successor != j.at("successor").get<std::vector<std::size_t>>())
        throw input_error("stored successor does not match the stored weights");
    return sp;
}

inline json count_document(const std::string& kind, const ShuffleParams& p, std::size_t alphabet,
                           const BigCount& count, const std::string& method) {
    return json{{"schema", schema_name(kind)},
                {"params", p},
                {"labels", alphabet},
                {"method", method},
                {"count", count.str()}};
}

inline BigCount count_from_json(const json& j) { return BigCount(j.at("count").get<std::string>()); }

inline json deck_stream_document(const std::string& kind, const ShuffleParams& p, std::size_t alphabet,
                                 const std::vector<Deck>& decks) {
    return json{{"schema", schema_name(kind)},
                {"params", p},
                {"labels", alphabet},
                {"count", decks.size()},
                {"decks", deck_list_json(decks, alphabet)}};
}

inline json periods_document(const ShuffleParams& p, const PeriodSet& s) {
    return json{{"schema", schema_name("periods")}, {"params", p}, {"lcm", s.lcm_cycles}, {"divisors", s.divisors}};
}

inline PeriodSet periods_from_json(const json& j) {
    require_schema(j, "periods");
    return PeriodSet{j.at("lcm").get<std::uint64_t>(), j.at("divisors").get<std::vector<std::uint64_t>>()};
}

inline json histogram_json(const std::map<std::size_t, std::size_t>& h) {
    json arr = json::array();
    for (const auto& [len, count] : h) arr.push_back(json{{"length", len}, {"cycles", count}});
    return arr;
}

inline std::map<std::size_t, std::size_t> histogram_from_json(const json& arr) {
    std::map<std::size_t, std::size_t> h;
    for (const json& e : arr) h[e.at("length").get<std::size_t>()] = e.at("cycles").get<std::size_t>();
    return h;
}

inline json theorem_document(const CycleTheoremReport& r) {
    return json{{"schema", schema_name("cycle-theorem")},
                {"params", r.params},
                {"order", r.order},
                {"histogram", histogram_json(r.histogram)},
                {"lengths_divide_order", r.lengths_divide_order},
                {"order_attained", r.order_attained},
                {"t_divides_order", r.t_divides_order},
                {"pass", r.pass()}};
}

inline CycleTheoremReport theorem_from_json(const json& j) {
    require_schema(j, "cycle-theorem");
    CycleTheoremReport r;
    r.params = j.at("params").get<ShuffleParams>();
    r.order = j.at("order").get<std::uint64_t>();
    r.histogram = histogram_from_json(j.at("histogram"));
    r.lengths_divide_order = j.at("lengths_divide_order").get<bool>();
    r.order_attained = j.at("order_attained").get<bool>();
    r.t_divides_order = j.at("t_divides_order").get<bool>();
    return r;
}

inline json cycle_stats_document(const ShuffleParams& p, const CycleStats& s, const std::string& method) {
    return json{{"schema", schema_name("cycle-stats")},
                {"params", p},
                {"method", method},
                {"histogram", histogram_json(s.histogram)},
                {"lcm", s.lcm},
                {"max_length", s.max_length},
                {"lcm_equals_max", s.lcm_equals_max()}};
}

inline CycleStats cycle_stats_from_json(const json& j) {
    require_schema(j, "cycle-stats");
    CycleStats s;
    s.histogram = histogram_from_json(j.at("histogram"));
    s.lcm = j.at("lcm").get<std::uint64_t>();
    s.max_length = j.at("max_length").get<std::size_t>();
    return s;
}

inline json conjecture_document(std::size_t max_n, const ConjectureReport& r) {
    json ce = json::array();
    for (const ConjectureCase& c : r.counterexamples)
        ce.push_back(json{{"N", c.N}, {"k", c.k}, {"values", c.values}});
    return json{{"schema", schema_name("conjecture-scan")},
                {"max_n", max_n},
                {"checked", r.checked},
                {"counterexamples", ce}};
}

inline ConjectureReport conjecture_from_json(const json& j) {
    require_schema(j, "conjecture-scan");
    ConjectureReport r;
    r.checked = j.at("checked").get<std::size_t>();
    for (const json& c : j.at("counterexamples"))
        r.counterexamples.push_back(
            {c.at("N").get<std::size_t>(), c.at("k").get<std::size_t>(), false, c.at("values").get<std::vector<Weight>>()});
    return r;
}

} // namespace ordered_shuffle
