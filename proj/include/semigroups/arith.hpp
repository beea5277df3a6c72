#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace semigroups {

// All semigroup arithmetic runs on int64_t with overflow checks. Anything
// that would leave the 63-bit range throws instead of wrapping.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in addition");
    return out;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in subtraction");
    return out;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in multiplication");
    return out;
}

/// gcd of a non-empty list of positive integers.
inline int64_t gcd_all(const std::vector<int64_t>& values) {
    if (values.empty())
        throw std::invalid_argument("gcd_all: empty list");
    int64_t g = 0;
    for (int64_t v : values) {
        if (v < 1)
            throw std::invalid_argument("gcd_all: values must be positive");
        g = std::gcd(g, v);
    }
    return g;
}

/// Inverse of a modulo m (m >= 2, gcd(a, m) = 1), via extended Euclid.
inline int64_t mod_inverse(int64_t a, int64_t m) {
    if (m < 2)
        throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    int64_t r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        int64_t t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: arguments are not coprime");
    return t0 < 0 ? t0 + m : t0;
}

}  // namespace semigroups
