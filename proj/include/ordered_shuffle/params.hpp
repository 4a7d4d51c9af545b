#pragma once

#include <cstddef>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace ordered_shuffle {

/// Deck geometry: N = k^t * q = k * n with t >= 1 maximal, so k does not divide q.
/// The deck is laid out as a k x n matrix (k stacks of n cards).
struct ShuffleParams {
    std::size_t N = 0; // cards
    std::size_t k = 0; // stacks
    unsigned t = 0;    // largest power of k dividing N
    std::size_t q = 0; // cofactor N / k^t
    std::size_t n = 0; // stack size N / k

    bool operator==(const ShuffleParams&) const = default;

    bool coprime_cofactor() const { return std::gcd(q, k) == 1; }
};

inline ShuffleParams make_params(std::size_t N, std::size_t k) {
    if (k < 2) throw input_error("k must be at least 2 (got " + std::to_string(k) + ")");
    if (N == 0) throw input_error("N must be positive");
    if (N % k != 0)
        throw input_error("k = " + std::to_string(k) + " does not divide N = " + std::to_string(N));
    ShuffleParams p;
    p.N = N;
    p.k = k;
    p.n = N / k;
    p.q = N;
    while (p.q % k == 0) {
        p.q /= k;
        ++p.t;
    }
    return p;
}

} // namespace ordered_shuffle
