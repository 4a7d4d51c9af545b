// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordered_shuffle/ordered_shuffle.hpp"

using namespace ordered_shuffle;

namespace {

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail << what;
        ok = ok && cond;
    }
};

template <class F>
void for_each_instance(std::size_t max_n, F&& f) {
    for (std::size_t N = 2; N <= max_n; ++N)
        for (std::size_t k = 2; k <= N; ++k)
            if (N % k == 0) f(make_params(N, k));
}

std::string nk(const ShuffleParams& p) { return "N=" + std::to_string(p.N) + " k=" + std::to_string(p.k); }

bool generalized_defined(const ShuffleParams& p) {
    const std::size_t g = std::gcd(p.q, p.k);
    return std::gcd(p.q / g, g) == 1;
}

void c1(Check& c) {
    c.expect(format_deck(shuffle_once(parse_deck("01211201"), make_params(8, 2))) == "10212011", "figure shuffle");
    const ShuffleParams p = make_params(12, 3);
    Deck d = parse_deck("021100122110");
    for (const char* expected : {"200210111210", "211200110210", "200210111210"}) {
        d = shuffle_once(d, p);
        c.expect(format_deck(d) == expected, std::string("12-card step to ") + expected);
    }
    const Orbit o = find_orbit(parse_deck("021100122110"), p);
    c.expect(o.settle == 1 && o.period == 2, "orbit settle/period");
}

void c2(Check& c) {
    const std::vector<Weight> t12{0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2};
    const std::vector<Weight> t24{0, 1, 4, 5, 6, 7, 1, 2, 5, 6, 7, 8, 1, 2, 3, 4, 7, 8, 2, 3, 4, 5, 8, 9};
    const std::vector<Weight> t32{0, 1, 2, 3, 1, 2, 3, 4, 2, 3, 4, 5, 3, 4, 5, 6,
                                  1, 2, 3, 4, 2, 3, 4, 5, 3, 4, 5, 6, 4, 5, 6, 7};
    c.expect(algorithm_up(make_params(12, 3)).values() == t12, "N=12 k=3 table");
    c.expect(algorithm_up(make_params(24, 6)).values() == t24, "N=24 k=6 table");
    c.expect(algorithm_up(make_params(32, 4)).values() == t32, "N=32 k=4 table");
    c.expect(format_weight_table(t12) == format_weight_table(algorithm_up(make_params(12, 3))), "table text");
}

void c3(Check& c) {
    std::size_t checked = 0;
    for (std::size_t N = 2; N <= 2000; ++N) {
        for (std::size_t k = 2; k <= 10 && k <= N; ++k) {
            if (N % k != 0) continue;
            const ShuffleParams p = make_params(N, k);
            if (!p.coprime_cofactor()) continue;
            const CycleTheoremReport r = verify_cycle_theorem(p);
            ++checked;
            c.expect(r.pass(), "theorem fails at " + nk(p));
            c.expect(r.histogram.rbegin()->first == r.order, "max length differs from order at " + nk(p));
        }
    }
    c.detail << checked << " instances";
}

void c4(Check& c) {
    const ShufflingPoset sp = build_shuffling_poset(algorithm_up(make_params(32, 4)));
    const CycleStats s = cycle_length_stats(sp);
    c.expect(cycle_length_of(sp, 1) == 3, "cycle of 1 has length " + std::to_string(cycle_length_of(sp, 1)));
    c.expect(s.max_length == 6, "max cycle length " + std::to_string(s.max_length));
}

BigCount fixed_count(std::size_t N, std::size_t k, std::size_t j) {
    return count_fixed(build_fixed_poset(build_shuffling_poset(algorithm_up(make_params(N, k)))), j);
}

void c5(Check& c) {
    std::size_t N = 4;
    for (unsigned t = 1; t <= 5; ++t) {
        N *= 3;
        const BigCount got = fixed_count(N, 2, 2);
        c.expect(got == BigCount(4) << t, "N=" + std::to_string(N) + " gives " + got.str());
    }
    c.expect(fixed_count(972, 2, 2) == 128, "N=972");
}

void c6(Check& c) {
    const BigCount got = fixed_count(1024, 2, 2);
    c.expect(got == BigCount(292592830), "N=1024 gives " + got.str());
    c.detail << "count " << got;
}

void c7_and_10(Check& c7, Check& c10) {
    std::size_t cases = 0;
    for_each_instance(12, [&](const ShuffleParams& p) {
        std::vector<WeightMethod> methods{WeightMethod::up};
        if (p.coprime_cofactor()) methods.push_back(WeightMethod::basek);
        else if (generalized_defined(p)) methods.push_back(WeightMethod::general);
        const std::uint64_t m = cycle_length_stats(build_shuffling_poset(algorithm_up(p))).lcm;
        const std::vector<Weight> up = algorithm_up(p).values();
        for (std::size_t j : {2, 3}) {
            if (std::pow(double(j), double(p.N)) > double(kDefaultBudget)) continue;
            const StateGraph g = explore_states(p, j);
            std::vector<Deck> fixed_bf;
            for (std::uint64_t s = 0; s < g.space.size(); ++s)
                if (g.next[s] == s) fixed_bf.push_back(g.space.decode(s));
            const std::vector<Deck> periodic_bf = periodic_decks(g);
            for (WeightMethod wm : methods) {
                const ShufflingPoset sp = build_shuffling_poset(make_weight(p, wm));
                const std::string tag = nk(p) + " j=" + std::to_string(j) + " " + to_string(wm);
                c7.expect(collect_labelings(build_fixed_poset(sp), j) == fixed_bf, "fixed set differs at " + tag);
                c7.expect(collect_labelings(build_periodic_poset(sp), j) == periodic_bf,
                          "periodic set differs at " + tag);
                ++cases;
            }
            const auto [settle, witness] = max_settle(g);
            const std::size_t top_level = static_cast<std::size_t>(*std::max_element(up.begin(), up.end()));
            c10.expect(settle <= 3 * p.t * m, "bound fails at " + nk(p) + " j=" + std::to_string(j));
            // Same bound with t read as the number of weight levels minus one.
            c10.expect(settle <= 3 * std::max<std::size_t>(top_level, 1) * m,
                       "level-count bound fails at " + nk(p) + " j=" + std::to_string(j));
            (void)witness;
        }
    });
    c7.detail << cases << " (instance, j, weight) cases";
    c10.detail << "all N <= 12, j in {2,3}";
}

void c8(Check& c) {
    for (std::size_t N : {12, 24}) {
        for (std::size_t k : {2, 3}) {
            const ShuffleParams p = make_params(N, k);
            if (!p.coprime_cofactor()) continue;
            const std::uint64_t order = mult_order(k, N - p.q);
            const std::set<std::uint32_t> observed = observed_periods(explore_states(p, 2));
            for (std::uint32_t per : observed)
                c.expect(order % per == 0, "observed period " + std::to_string(per) + " at " + nk(p));
            const ShufflingPoset sp = build_shuffling_poset(base_k_weight(p));
            const PeriodicPoset pp = build_periodic_poset(sp);
            for (std::uint64_t d : divisors(order)) {
                const Deck deck = construct_period_stack(sp, pp, d);
                const Orbit o = find_orbit(deck, p);
                c.expect(o.settle == 0 && o.period == d && max_label(deck) <= 1,
                         "witness for d=" + std::to_string(d) + " at " + nk(p));
            }
            c.detail << nk(p) << " ord=" << order << " periods{";
            for (std::uint32_t per : observed) c.detail << ' ' << per;
            c.detail << " } ";
        }
    }
}

void c9(Check& c) {
    for_each_instance(200, [&](const ShuffleParams& p) {
        const WeightFunction sym = symmetric_weight(p);
        c.expect(is_symmetric(sym), "up+down not symmetric at " + nk(p));
        std::vector<WeightFunction> wfs{algorithm_up(p), algorithm_down(p), sym};
        if (p.coprime_cofactor()) wfs.push_back(base_k_weight(p));
        for (const WeightFunction& wf : wfs) {
            const ShufflingPoset sp = build_shuffling_poset(wf);
            std::vector<bool> hit(p.N, false);
            for (std::size_t a = 0; a < p.N; ++a) {
                const std::size_t b = sp.successor[a];
                c.expect(!hit[b] && wf(a) == wf(b), "successor not a weight-preserving bijection at " + nk(p));
                hit[b] = true;
            }
            if (is_symmetric(wf)) c.expect(complement_symmetry_check(sp), "complement symmetry fails at " + nk(p));
        }
    });
    for (std::size_t N = 2; N <= 400; ++N) {
        for (std::size_t k = 2; k <= 10 && k <= N; ++k) {
            if (N % k != 0) continue;
            const ShuffleParams p = make_params(N, k);
            if (!p.coprime_cofactor()) continue;
            const ShufflingPoset sp = build_shuffling_poset(base_k_weight(p));
            for (std::size_t a = 0; a < N; ++a)
                c.expect(sp.successor[a] == mapping_rule_gcd1(a, p), "mapping rule differs at " + nk(p));
        }
    }
    std::mt19937 rng(2024);
    for_each_instance(64, [&](const ShuffleParams& p) {
        const ShufflingPoset sp = build_shuffling_poset(algorithm_up(p));
        std::uniform_int_distribution<Label> dist(0, 3);
        Deck d(p.N);
        for (int rep = 0; rep < 1000; ++rep) {
            for (Label& x : d) x = dist(rng);
            if (shuffle_in_poset(d, sp) != shuffle_once(d, p)) {
                c.expect(false, "poset shuffle differs at " + nk(p));
                return;
            }
        }
    });
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const std::vector<std::pair<const char*, std::function<void(Check&)>>> simple{
        {"1 worked shuffles", c1},        {"2 golden weight tables", c2}, {"3 cycle-length theorem sweep", c3},
        {"4 N=32 k=4 cycle lengths", c4}, {"5 fixed counts N=4*3^t", c5}, {"6 fixed count N=1024", c6},
    };
    bool all = true;
    auto report = [&](const std::string& name, const Check& c, clock::duration took) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(took).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << name << "  (" << ms << " ms)  " << c.detail.str()
                  << std::endl;
        all = all && c.ok;
    };
    auto guarded = [](Check& c, const std::function<void(Check&)>& f) {
        try {
            f(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
    };

    for (const auto& [name, f] : simple) {
        Check c;
        const auto start = clock::now();
        guarded(c, f);
        report(name, c, clock::now() - start);
    }

    Check c7, c10;
    auto start = clock::now();
    try {
        c7_and_10(c7, c10);
    } catch (const std::exception& e) {
        c7.expect(false, std::string("exception: ") + e.what());
        c10.expect(false, std::string("exception: ") + e.what());
    }
    const auto took7 = clock::now() - start;
    report("7 oracle equivalence", c7, took7);

    Check c8c;
    start = clock::now();
    guarded(c8c, c8);
    report("8 periods", c8c, clock::now() - start);

    Check c9c;
    start = clock::now();
    guarded(c9c, c9);
    report("9 structural invariants", c9c, clock::now() - start);

    report("10 settling bound", c10, took7);
    return all ? 0 : 1;
}
