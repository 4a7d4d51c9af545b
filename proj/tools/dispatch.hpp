#pragma once

// Command line front end. `dispatch` parses one invocation, runs it and returns
// the exit status together with everything written to stdout and stderr, so the
// tool can be driven in-process by tests.
//
// Exit status: 0 success, 1 usage error, 2 precondition or validation failure,
// 3 enumeration budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ordered_shuffle/ordered_shuffle.hpp"

namespace ordered_shuffle::cli {

inline constexpr const char* kBudgetEnv = "ORDERED_SHUFFLE_BUDGET";

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace detail {

struct Options {
    std::size_t N = 0;
    std::size_t k = 0;
    std::string deck;
    std::string method = "up";
    std::string kind = "shuffling";
    std::string values;
    std::string format = "text";
    std::string output;
    std::size_t labels = 2;
    std::uint64_t period = 1;
    std::size_t max_n = 200;
    std::optional<std::uint64_t> budget;
    bool dot = false;
};

inline std::uint64_t effective_budget(const Options& o) {
    if (o.budget) return *o.budget;
    if (const char* env = std::getenv(kBudgetEnv)) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw input_error(std::string(kBudgetEnv) + " is not a number: " + env);
        }
    }
    return kDefaultBudget;
}

inline WeightMethod method_of(const Options& o) {
    if (auto m = parse_weight_method(o.method)) return *m;
    throw input_error("unknown weight method '" + o.method + "' (up, down, basek, general, symmetric)");
}

inline std::vector<Weight> parse_values(const std::string& text) {
    std::vector<Weight> values;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw input_error("malformed weight value '" + field + "'");
        }
    }
    if (values.empty()) throw input_error("no weight values given");
    return values;
}

inline std::string join(const std::vector<std::uint64_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s;
}

inline std::string histogram_text(const std::map<std::size_t, std::size_t>& h) {
    std::string s;
    for (const auto& [len, count] : h) s += (s.empty() ? "" : ", ") + std::to_string(len) + ":" + std::to_string(count);
    return s;
}

class Runner {
public:
    explicit Runner(const Options& o) : o_(o) {}

    std::string run(const std::string& command) {
        if (command == "shuffle") return shuffle();
        if (command == "orbit") return orbit();
        if (command == "weight") return weight();
        if (command == "validate-weight") return validate_weight();
        if (command == "poset") return poset();
        if (command == "count-fixed") return count_fixed_cmd();
        if (command == "enum-fixed") return enumerate(false);
        if (command == "enum-periodic") return enumerate(true);
        if (command == "periods") return periods();
        if (command == "make-period") return make_period();
        if (command == "verify-theorem") return verify_theorem();
        if (command == "cycle-stats") return cycle_stats();
        if (command == "conjecture-scan") return conjecture();
        if (command == "max-settle") return max_settle_cmd();
        throw input_error("unknown subcommand " + command);
    }

    int status = 0;

private:
    bool json_out() const { return o_.format == "json"; }
    ShuffleParams params() const { return make_params(o_.N, o_.k); }

    Deck input_deck(const ShuffleParams& p) const {
        Deck d = parse_deck(o_.deck);
        require_deck(d, p);
        return d;
    }

    std::string emit(const json& doc) const { return doc.dump(2) + "\n"; }

    std::string shuffle() {
        const ShuffleParams p = params();
        const Deck d = input_deck(p);
        const Deck out = shuffle_once(d, p);
        const std::size_t alphabet = max_label(d) + 1;
        if (json_out())
            return emit(json{{"schema", schema_name("shuffle")},
                             {"params", p},
                             {"deck", format_deck(d, alphabet)},
                             {"result", format_deck(out, alphabet)}});
        return format_deck(out, alphabet) + "\n";
    }

    std::string orbit() {
        const ShuffleParams p = params();
        const Deck d = input_deck(p);
        const Orbit o = find_orbit(d, p);
        if (json_out()) return emit(orbit_document(p, d, o));
        const std::size_t alphabet = max_label(d) + 1;
        std::string s = "settle " + std::to_string(o.settle) + "\nperiod " + std::to_string(o.period) + "\n";
        for (const Deck& c : o.cycle_decks) s += format_deck(c, alphabet) + "\n";
        return s;
    }

    std::string weight() {
        const ShuffleParams p = params();
        const WeightFunction wf = make_weight(p, method_of(o_));
        if (json_out()) return emit(weight_document(wf, o_.method));
        return format_weight_table(wf) + "symmetric " + (is_symmetric(wf) ? "yes" : "no") + "\n";
    }

    std::string validate_weight() {
        const ShuffleParams p = params();
        const WeightDiagnostic d = check_weights(parse_values(o_.values), p);
        if (!d.ok()) status = 2;
        if (json_out()) return emit(validation_document(p, d));
        return d.ok() ? "valid\n" : "invalid: " + d.message + "\n";
    }

    std::string poset() {
        const ShuffleParams p = params();
        const ShufflingPoset sp = build_shuffling_poset(make_weight(p, method_of(o_)));
        if (o_.kind == "shuffling") {
            if (o_.dot) return to_dot(sp);
            if (json_out()) return emit(poset_document(sp, o_.method));
            std::string s;
            for (const ShuffleCycle& c : sp.cycles) {
                s += "level " + std::to_string(c.level) + ": (";
                for (std::size_t i = 0; i < c.members.size(); ++i)
                    s += (i ? " " : "") + std::to_string(c.members[i]);
                s += ")\n";
            }
            return s;
        }
        if (o_.kind != "fixed" && o_.kind != "periodic")
            throw input_error("unknown poset kind '" + o_.kind + "' (shuffling, fixed, periodic)");
        const bool fixed = o_.kind == "fixed";
        const LabelPoset lp = fixed ? static_cast<LabelPoset>(build_fixed_poset(sp))
                                    : static_cast<LabelPoset>(build_periodic_poset(sp));
        if (o_.dot) return to_dot(lp, fixed ? "fixed_poset" : "periodic_poset");
        if (json_out()) {
            json doc = label_poset_json(lp);
            doc["schema"] = schema_name(fixed ? "fixed-poset" : "periodic-poset");
            doc["method"] = o_.method;
            return emit(doc);
        }
        std::string s = std::to_string(lp.size()) + " nodes, " + std::to_string(lp.edges.size()) + " edges\n";
        for (const CoverEdge& e : lp.edges)
            s += std::to_string(e.low) + " < " + std::to_string(e.high) + "\n";
        return s;
    }

    FixedPoset fixed_poset(const ShuffleParams& p) const {
        return build_fixed_poset(build_shuffling_poset(make_weight(p, method_of(o_))));
    }

    std::string count_fixed_cmd() {
        const ShuffleParams p = params();
        const BigCount c = count_fixed(fixed_poset(p), o_.labels);
        if (json_out()) return emit(count_document("fixed-count", p, o_.labels, c, o_.method));
        return c.str() + "\n";
    }

    std::string enumerate(bool periodic) {
        const ShuffleParams p = params();
        const ShufflingPoset sp = build_shuffling_poset(make_weight(p, method_of(o_)));
        const LabelPoset lp = periodic ? static_cast<LabelPoset>(build_periodic_poset(sp))
                                       : static_cast<LabelPoset>(build_fixed_poset(sp));
        const std::uint64_t budget = effective_budget(o_);
        const BigCount total = count_monotone_labelings(lp, o_.labels);
        if (total > budget)
            throw budget_exceeded("stream is larger than the enumeration budget",
                                  total > std::numeric_limits<std::uint64_t>::max()
                                      ? std::numeric_limits<std::uint64_t>::max()
                                      : static_cast<std::uint64_t>(total),
                                  budget);
        const std::vector<Deck> decks = collect_labelings(lp, o_.labels);
        if (json_out())
            return emit(deck_stream_document(periodic ? "periodic-decks" : "fixed-decks", p, o_.labels, decks));
        std::string s;
        for (const Deck& d : decks) s += format_deck(d, o_.labels) + "\n";
        return s;
    }

    std::string periods() {
        const ShuffleParams p = params();
        const PeriodSet s = possible_periods(build_shuffling_poset(make_weight(p, method_of(o_))));
        if (json_out()) return emit(periods_document(p, s));
        return "lcm " + std::to_string(s.lcm_cycles) + "\ndivisors " + join(s.divisors) + "\n";
    }

    std::string make_period() {
        const ShuffleParams p = params();
        const ShufflingPoset sp = build_shuffling_poset(make_weight(p, method_of(o_)));
        const Deck d = construct_period_stack(sp, build_periodic_poset(sp), o_.period);
        const Orbit o = find_orbit(d, p);
        if (json_out())
            return emit(json{{"schema", schema_name("period-stack")},
                             {"params", p},
                             {"d", o_.period},
                             {"deck", format_deck(d, 2)},
                             {"settle", o.settle},
                             {"period", o.period}});
        return format_deck(d, 2) + "\n";
    }

    std::string verify_theorem() {
        const CycleTheoremReport r = verify_cycle_theorem(params());
        if (!r.pass()) status = 2;
        if (json_out()) return emit(theorem_document(r));
        const ShuffleParams& p = r.params;
        return std::string(r.pass() ? "pass" : "FAIL") + ": ord_" + std::to_string(p.k) + "(" +
               std::to_string(p.N - p.q) + ") = " + std::to_string(r.order) + "\ncycle lengths " +
               histogram_text(r.histogram) + "\nlengths divide order: " + (r.lengths_divide_order ? "yes" : "no") +
               "\norder attained: " + (r.order_attained ? "yes" : "no") +
               "\nt divides order: " + (r.t_divides_order ? "yes" : "no") + "\n";
    }

    std::string cycle_stats() {
        const ShuffleParams p = params();
        const CycleStats s = cycle_length_stats(build_shuffling_poset(make_weight(p, method_of(o_))));
        if (json_out()) return emit(cycle_stats_document(p, s, o_.method));
        return "cycle lengths " + histogram_text(s.histogram) + "\nlcm " + std::to_string(s.lcm) + "\nmax " +
               std::to_string(s.max_length) + "\nlcm equals max: " + (s.lcm_equals_max() ? "yes" : "no") + "\n";
    }

    std::string conjecture() {
        const ConjectureReport r = conjecture_scan(o_.max_n);
        if (json_out()) return emit(conjecture_document(o_.max_n, r));
        std::string s = "checked " + std::to_string(r.checked) + " (N, k) pairs, " +
                        std::to_string(r.counterexamples.size()) + " not symmetric\n";
        for (const ConjectureCase& c : r.counterexamples) {
            s += "N=" + std::to_string(c.N) + " k=" + std::to_string(c.k) + ":";
            for (Weight v : c.values) s += " " + std::to_string(v);
            s += "\n";
        }
        return s;
    }

    std::string max_settle_cmd() {
        const ShuffleParams p = params();
        const auto [settle, witness] = max_settle(p, o_.labels, effective_budget(o_));
        const std::uint64_t m = cycle_length_stats(build_shuffling_poset(algorithm_up(p))).lcm;
        const std::uint64_t bound = 3 * p.t * m;
        if (json_out())
            return emit(json{{"schema", schema_name("max-settle")},
                             {"params", p},
                             {"labels", o_.labels},
                             {"max_settle", settle},
                             {"witness", format_deck(witness, o_.labels)},
                             {"lcm_cycles", m},
                             {"bound_3tm", bound}});
        return "max settle " + std::to_string(settle) + "\nwitness " + format_deck(witness, o_.labels) +
               "\nbound 3tm " + std::to_string(bound) + "\n";
    }

    const Options& o_;
};

} // namespace detail

inline CliResult dispatch(const std::vector<std::string>& args) {
    detail::Options o;
    CLI::App app{"Ordered-card shuffling: orbits, weight functions, posets and stack counts", "ordered-shuffle"};
    app.require_subcommand(1);

    auto with_nk = [&](CLI::App* sub) {
        sub->add_option("--n,-N", o.N, "number of cards N")->required();
        sub->add_option("--k,-k", o.k, "number of stacks k")->required();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output,-o", o.output, "write the output to this file");
        return sub;
    };
    auto with_method = [&](CLI::App* sub) {
        sub->add_option("--method", o.method, "weight function: up, down, basek, general, symmetric");
        return sub;
    };
    auto with_labels = [&](CLI::App* sub) {
        sub->add_option("--labels,-j", o.labels, "alphabet size j")->check(CLI::PositiveNumber);
        return sub;
    };
    auto with_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, std::string("enumeration budget (env ") + kBudgetEnv + ")");
        return sub;
    };

    with_nk(app.add_subcommand("shuffle", "shuffle a deck once"))->add_option("--deck", o.deck)->required();
    with_nk(app.add_subcommand("orbit", "settle time and periodic cycle of a deck"))
        ->add_option("--deck", o.deck)
        ->required();
    with_method(with_nk(app.add_subcommand("weight", "print a shuffling weight function")));
    with_nk(app.add_subcommand("validate-weight", "check a weight function"))
        ->add_option("--values", o.values, "comma separated weights")
        ->required();
    {
        CLI::App* sub = with_method(with_nk(app.add_subcommand("poset", "shuffling, fixed or periodic poset")));
        sub->add_option("--kind", o.kind)->check(CLI::IsMember({"shuffling", "fixed", "periodic"}));
        sub->add_flag("--dot", o.dot, "Graphviz output");
    }
    with_labels(with_method(with_nk(app.add_subcommand("count-fixed", "count fixed decks"))));
    with_budget(with_labels(with_method(with_nk(app.add_subcommand("enum-fixed", "list fixed decks")))));
    with_budget(with_labels(with_method(with_nk(app.add_subcommand("enum-periodic", "list periodic decks")))));
    with_method(with_nk(app.add_subcommand("periods", "possible periods")));
    with_method(with_nk(app.add_subcommand("make-period", "construct a deck of a given period")))
        ->add_option("--d", o.period, "period")
        ->required()
        ->check(CLI::PositiveNumber);
    with_nk(app.add_subcommand("verify-theorem", "check cycle lengths against ord_k(N - q)"));
    with_method(with_nk(app.add_subcommand("cycle-stats", "cycle length statistics")));
    {
        CLI::App* sub = app.add_subcommand("conjecture-scan", "symmetry of algorithm-generated weights");
        sub->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output,-o", o.output);
    }
    with_budget(with_labels(with_nk(app.add_subcommand("max-settle", "longest settle time by brute force"))));

    CliResult result;
    std::vector<const char*> argv{"ordered-shuffle"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 1;
        result.err = std::string(e.what()) + "\n";
        return result;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        detail::Runner runner(o);
        std::string text = runner.run(command);
        result.exit_code = runner.status;
        if (!o.output.empty()) {
            std::ofstream file(o.output, std::ios::binary);
            if (!file || !(file << text)) throw input_error("cannot write output file " + o.output);
        } else {
            result.out = std::move(text);
        }
    } catch (const budget_exceeded& e) {
        result.exit_code = 3;
        result.err = std::string("budget exceeded: ") + e.what() + "\n";
    } catch (const input_error& e) {
        result.exit_code = 1;
        result.err = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

} // namespace ordered_shuffle::cli
