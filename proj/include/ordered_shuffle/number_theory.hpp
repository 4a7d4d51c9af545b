#pragma once

// Small integer helpers: base-k digits, modular powers, multiplicative order,
// divisors and overflow-checked lcm.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ordered_shuffle {

/// Digit `position` (0 = least significant) of `value` written in base `base`.
constexpr std::uint64_t base_digit(std::uint64_t value, std::uint64_t base, unsigned position) {
    for (unsigned i = 0; i < position && value != 0; ++i) value /= base;
    return value % base;
}

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Prime factorisation by trial division, as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

/// Smallest M >= 1 with k^M = 1 (mod s). Requires gcd(k, s) = 1.
inline std::uint64_t mult_order(std::uint64_t k, std::uint64_t s) {
    if (s == 0) throw precondition_error("mult_order: modulus must be positive");
    if (std::gcd(k, s) != 1)
        throw precondition_error("mult_order: gcd(" + std::to_string(k) + ", " + std::to_string(s) +
                                 ") != 1, order undefined");
    if (s == 1) return 1;
    // The order divides phi(s); strip prime factors while the power stays 1.
    std::uint64_t order = euler_phi(s);
    for (auto [p, e] : factorize(order)) {
        for (unsigned i = 0; i < e && order % p == 0; ++i) {
            if (pow_mod(k, order / p, s) != 1) break;
            order /= p;
        }
    }
    return order;
}

/// All positive divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t g = std::gcd(a, b);
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a / g, b, &out)) throw std::overflow_error("lcm overflows 64 bits");
    return out;
}

} // namespace ordered_shuffle
