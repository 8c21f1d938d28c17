#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "lrq/errors.hpp"

namespace lrq::nt {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        raise(ErrorKind::ArithmeticOverflow, "int64 multiplication overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        raise(ErrorKind::ArithmeticOverflow, "int64 addition overflow");
    return r;
}

inline std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < -INT64_MAX)
        raise(ErrorKind::ArithmeticOverflow, "value exceeds int64 range");
    return static_cast<std::int64_t>(v);
}

inline std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (auto p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

/// Exponent of p in n (n > 0, p prime).
inline int valuation(std::int64_t n, std::int64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// Largest power of p dividing n; 1 when p == 0.
inline std::int64_t p_part(std::int64_t n, std::int64_t p) {
    if (p == 0) return 1;
    std::int64_t r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

inline bool is_power_of(std::int64_t n, std::int64_t p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
    __int128 result = 1 % m;
    __int128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = result * b % m;
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

inline std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        std::int64_t q = g / a1;
        std::int64_t t = g - q * a1;
        g = a1;
        a1 = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1) return std::nullopt;
    return mod(x, m);
}

/// Multiplicative order of r modulo m; 0 when gcd(r, m) != 1.
inline std::int64_t multiplicative_order(std::int64_t r, std::int64_t m) {
    if (m == 1) return 1;
    if (std::gcd(mod(r, m), m) != 1) return 0;
    std::int64_t x = mod(r, m);
    std::int64_t k = 1;
    while (x != 1) {
        x = static_cast<std::int64_t>(static_cast<__int128>(x) * mod(r, m) % m);
        ++k;
    }
    return k;
}

inline std::vector<std::int64_t> units_mod(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t a = 1; a <= n; ++a)
        if (std::gcd(a % n, n) == 1) out.push_back(a % n);
    return out;
}

} // namespace lrq::nt
