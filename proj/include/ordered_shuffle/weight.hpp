#pragma once

// Shuffling weight functions on subscripts {0, ..., N-1}.
//
// phi is a shuffling weight function when, for every column l,
//   (i)  the weights of column {l + i*n} equal, as a multiset, the weights of
//        block {k*l + i}, and
//   (ii) the weights inside block {k*l, ..., k*l + k - 1} strictly increase.
// Together they make the weights within a column pairwise distinct, which is
// what lets the shuffle be read off as a weight-preserving bijection.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "number_theory.hpp"
#include "params.hpp"

namespace ordered_shuffle {

using Weight = std::int64_t;

/// First violated condition, in (condition, column) order.
struct WeightDiagnostic {
    int condition = 0; // 1 or 2; 0 when valid
    std::size_t column = 0;
    std::string message;

    bool ok() const { return condition == 0; }
};

class weight_error : public precondition_error {
public:
    explicit weight_error(WeightDiagnostic diag)
        : precondition_error("invalid shuffling weight function: " + diag.message), diag_(std::move(diag)) {}
    const WeightDiagnostic& diagnostic() const noexcept { return diag_; }

private:
    WeightDiagnostic diag_;
};

inline WeightDiagnostic check_weights(const std::vector<Weight>& values, const ShuffleParams& params) {
    WeightDiagnostic d;
    if (values.size() != params.N) {
        d.condition = -1;
        d.message = "expected " + std::to_string(params.N) + " values, got " + std::to_string(values.size());
        return d;
    }
    const std::size_t k = params.k, n = params.n;
    std::vector<Weight> col(k), blk(k);
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t i = 0; i < k; ++i) {
            col[i] = values[l + i * n];
            blk[i] = values[k * l + i];
        }
        std::sort(col.begin(), col.end());
        std::sort(blk.begin(), blk.end());
        if (col != blk) {
            d.condition = 1;
            d.column = l;
            d.message = "condition (i) fails at l = " + std::to_string(l) +
                        ": column and block weight multisets differ";
            return d;
        }
    }
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t i = 0; i + 1 < k; ++i) {
            if (values[k * l + i] >= values[k * l + i + 1]) {
                d.condition = 2;
                d.column = l;
                d.message = "condition (ii) fails at l = " + std::to_string(l) + ": phi(" +
                            std::to_string(k * l + i) + ") >= phi(" + std::to_string(k * l + i + 1) + ")";
                return d;
            }
        }
    }
    return d;
}

/// A validated shuffling weight function. Only constructible through `validate`.
class WeightFunction {
public:
    const ShuffleParams& params() const { return params_; }
    const std::vector<Weight>& values() const { return values_; }
    Weight operator()(std::size_t subscript) const { return values_[subscript]; }
    std::size_t size() const { return values_.size(); }

    bool operator==(const WeightFunction&) const = default;

    friend WeightFunction validate(std::vector<Weight> values, const ShuffleParams& params);

private:
    WeightFunction(std::vector<Weight> values, const ShuffleParams& params)
        : params_(params), values_(std::move(values)) {}

    ShuffleParams params_;
    std::vector<Weight> values_;
};

inline WeightFunction validate(std::vector<Weight> values, const ShuffleParams& params) {
    WeightDiagnostic diag = check_weights(values, params);
    if (!diag.ok()) throw weight_error(std::move(diag));
    return WeightFunction(std::move(values), params);
}

inline void normalize_min_zero(std::vector<Weight>& values) {
    if (values.empty()) return;
    const Weight lo = *std::min_element(values.begin(), values.end());
    for (Weight& v : values) v -= lo;
}

namespace detail {

enum class Sweep { up, down };

// Cells of the k x n array: column j, row i holds a = i + k*j (a subscript in
// block j) and b = a % n (the deck column that subscript sits in). Each round
// every column points at the column named by its next uncrossed cell; the
// cells generating edges of directed cycles get the current weight.
inline std::vector<Weight> run_cycle_algorithm(const ShuffleParams& params, Sweep sweep) {
    const std::size_t k = params.k, n = params.n;
    std::vector<Weight> phi(params.N, 0);
    // Rows not yet crossed out, counted from the sweep's starting edge.
    std::vector<std::size_t> used(n, 0);
    std::vector<std::size_t> target(n);
    std::vector<int> state(n);
    std::vector<std::size_t> on_cycle;
    const std::size_t none = n;

    auto cell = [&](std::size_t col) {
        const std::size_t row = sweep == Sweep::up ? used[col] : k - 1 - used[col];
        return row + k * col;
    };

    std::size_t remaining = params.N;
    Weight weight = 0;
    while (remaining != 0) {
        for (std::size_t col = 0; col < n; ++col) target[col] = used[col] < k ? cell(col) % n : none;

        // Cycles of a functional graph: walk from each unvisited vertex, colouring
        // with the start index; a walk that closes on its own colour found a cycle.
        on_cycle.clear();
        std::fill(state.begin(), state.end(), -1);
        for (std::size_t start = 0; start < n; ++start) {
            std::size_t v = start;
            while (v != none && state[v] == -1) {
                state[v] = static_cast<int>(start);
                v = target[v];
            }
            if (v == none || state[v] != static_cast<int>(start)) continue;
            std::size_t u = v;
            do {
                on_cycle.push_back(u);
                u = target[u];
            } while (u != v);
        }
        if (on_cycle.empty()) throw std::logic_error("weight algorithm stalled with uncrossed cells");

        for (std::size_t col : on_cycle) {
            phi[cell(col)] = weight;
            ++used[col];
            --remaining;
        }
        weight += sweep == Sweep::up ? 1 : -1;
    }
    normalize_min_zero(phi);
    return phi;
}

} // namespace detail

/// Generates a weight function by repeatedly extracting cycles, lowest cells first.
inline WeightFunction algorithm_up(const ShuffleParams& params) {
    return validate(detail::run_cycle_algorithm(params, detail::Sweep::up), params);
}

/// Mirror image of algorithm_up: highest cells first, weights descending, then
/// shifted so the minimum is 0.
inline WeightFunction algorithm_down(const ShuffleParams& params) {
    return validate(detail::run_cycle_algorithm(params, detail::Sweep::down), params);
}

/// phi(A) = sum of the t lowest base-k digits of A. Needs gcd(q, k) = 1.
inline WeightFunction base_k_weight(const ShuffleParams& params) {
    if (!params.coprime_cofactor())
        throw precondition_error("base-k weight needs gcd(q, k) = 1 (q = " + std::to_string(params.q) +
                                 ", k = " + std::to_string(params.k) + ")");
    std::vector<Weight> phi(params.N);
    for (std::size_t a = 0; a < params.N; ++a) {
        std::size_t rest = a;
        Weight sum = 0;
        for (unsigned i = 0; i < params.t; ++i) {
            sum += static_cast<Weight>(rest % params.k);
            rest /= params.k;
        }
        phi[a] = sum;
    }
    return validate(std::move(phi), params);
}

/// phi(A) = A_0 + ... + A_{t-1} + (A_t mod g), g = gcd(q, k).
/// Needs gcd(q / g, g) = 1; equals base_k_weight when g = 1.
inline WeightFunction generalized_weight(const ShuffleParams& params) {
    const std::size_t g = std::gcd(params.q, params.k);
    if (std::gcd(params.q / g, g) != 1)
        throw precondition_error("generalized weight needs gcd(q/g, g) = 1 with g = gcd(q, k) = " +
                                 std::to_string(g));
    std::vector<Weight> phi(params.N);
    for (std::size_t a = 0; a < params.N; ++a) {
        std::size_t rest = a;
        Weight sum = 0;
        for (unsigned i = 0; i < params.t; ++i) {
            sum += static_cast<Weight>(rest % params.k);
            rest /= params.k;
        }
        phi[a] = sum + static_cast<Weight>((rest % params.k) % g);
    }
    return validate(std::move(phi), params);
}

/// Pointwise sum of two weight functions on the same deck; condition (ii) is
/// preserved automatically, condition (i) is re-checked.
inline WeightFunction sum_weights(const WeightFunction& a, const WeightFunction& b) {
    if (!(a.params() == b.params())) throw input_error("weight functions are for different decks");
    std::vector<Weight> sum(a.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a(i) + b(i);
    normalize_min_zero(sum);
    return validate(std::move(sum), a.params());
}

inline WeightFunction symmetric_weight(const ShuffleParams& params) {
    return sum_weights(algorithm_up(params), algorithm_down(params));
}

/// True when phi(i) + phi(N-1-i) does not depend on i.
inline bool is_symmetric(const std::vector<Weight>& values) {
    const std::size_t N = values.size();
    for (std::size_t i = 0; i < N; ++i)
        if (values[i] + values[N - 1 - i] != values[0] + values[N - 1]) return false;
    return true;
}

inline bool is_symmetric(const WeightFunction& wf) { return is_symmetric(wf.values()); }

enum class WeightMethod { up, down, basek, general, symmetric };

inline WeightFunction make_weight(const ShuffleParams& params, WeightMethod method) {
    switch (method) {
    case WeightMethod::up: return algorithm_up(params);
    case WeightMethod::down: return algorithm_down(params);
    case WeightMethod::basek: return base_k_weight(params);
    case WeightMethod::general: return generalized_weight(params);
    case WeightMethod::symmetric: return symmetric_weight(params);
    }
    throw std::logic_error("unknown weight method");
}

inline std::optional<WeightMethod> parse_weight_method(std::string_view name) {
    if (name == "up") return WeightMethod::up;
    if (name == "down") return WeightMethod::down;
    if (name == "basek") return WeightMethod::basek;
    if (name == "general") return WeightMethod::general;
    if (name == "symmetric") return WeightMethod::symmetric;
    return std::nullopt;
}

inline const char* to_string(WeightMethod m) {
    switch (m) {
    case WeightMethod::up: return "up";
    case WeightMethod::down: return "down";
    case WeightMethod::basek: return "basek";
    case WeightMethod::general: return "general";
    case WeightMethod::symmetric: return "symmetric";
    }
    return "?";
}

struct ConjectureCase {
    std::size_t N = 0;
    std::size_t k = 0;
    bool symmetric = false;
    std::vector<Weight> values; // only kept for counterexamples
};

struct ConjectureReport {
    std::size_t checked = 0;
    std::vector<ConjectureCase> counterexamples;
};

/// Runs algorithm_up for every k >= 2 dividing N, min_n <= N <= max_n, and
/// collects the outputs that are not symmetric. Cases are in (N, k) order.
inline ConjectureReport conjecture_scan(std::size_t max_n, std::size_t min_n = 2) {
    ConjectureReport report;
    for (std::size_t N = std::max<std::size_t>(min_n, 2); N <= max_n; ++N) {
        for (std::size_t k = 2; k <= N; ++k) {
            if (N % k != 0) continue;
            const WeightFunction wf = algorithm_up(make_params(N, k));
            ++report.checked;
            if (!is_symmetric(wf)) report.counterexamples.push_back({N, k, false, wf.values()});
        }
    }
    return report;
}

} // namespace ordered_shuffle
