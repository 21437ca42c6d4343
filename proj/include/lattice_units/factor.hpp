/// @file factor.hpp
/// Deterministic 64-bit integer factorization: trial division through 10^6,
/// then Brent-cycle Pollard rho with a deterministic Miller-Rabin primality
/// certificate (the 12-base set that is exact for all 64-bit inputs).
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "exact.hpp"

namespace lattice_units {

/// Prime factorization as (prime, exponent) pairs with primes strictly
/// increasing; the product of p^e equals the factored integer.
struct FactorMap {
    std::vector<std::pair<std::uint64_t, int>> factors;

    bool operator==(const FactorMap&) const = default;

    Int product() const {
        Int n = 1;
        for (auto [p, e] : factors)
            for (int i = 0; i < e; ++i) n *= static_cast<unsigned long>(p);
        return n;
    }
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

/// Brent's variant of Pollard rho; deterministic by stepping the polynomial
/// increment. Caller guarantees n is odd, composite, and not a prime power
/// handled elsewhere.
inline std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 0;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            if (power == lam) { x = y; power <<= 1; lam = 0; }
            y = f(y);
            ++lam;
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_rec(std::uint64_t n, std::map<std::uint64_t, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) { ++out[n]; return; }
    std::uint64_t d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace detail

/// Complete prime factorization of n >= 1 (n = 1 gives the empty map).
/// Deterministic output ordering by increasing prime.
inline FactorMap factorize(std::uint64_t n) {
    if (n == 0) throw UsageError("factorize: n must be positive");
    FactorMap fm;
    for (std::uint64_t p = 2; p <= 1000000ull && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        fm.factors.emplace_back(p, e);
    }
    if (n > 1) {
        std::map<std::uint64_t, int> rest;
        detail::factor_rec(n, rest);
        for (auto [p, e] : rest) fm.factors.emplace_back(p, e);
    }
    return fm;
}

/// All divisors of the factored integer, unsorted count = prod (e_i + 1).
inline std::vector<std::uint64_t> divisors(const FactorMap& fm) {
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : fm.factors) {
        const std::size_t base = out.size();
        std::uint64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
        }
    }
    return out;
}

}  // namespace lattice_units
