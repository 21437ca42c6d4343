/// @file repcount.hpp
/// Representation counts for the hexagonal form H(a,b) = a^2 + ab + b^2 and
/// the square form S(a,b) = a^2 + b^2: full solution sets by brute force,
/// the multiplicative closed forms u(k) = 6 prod (e_i + 1) and
/// v(k) = 4 prod (e_i + 1), and the divisor-class forms
/// 6 (d_{3,1} - d_{3,2}) and 4 (d_{4,1} - d_{4,3}).
#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "factor.hpp"

namespace lattice_units {

enum class FormKind { hexagonal, square };

inline std::int64_t hex_form(std::int64_t a, std::int64_t b) { return a * a + a * b + b * b; }
inline std::int64_t square_form(std::int64_t a, std::int64_t b) { return a * a + b * b; }

/// All integer pairs representing a target by one of the two forms.
/// Ordered signed pairs; no quotient by symmetry.
struct RepSolutionSet {
    FormKind form;
    std::uint64_t target;
    std::vector<std::pair<std::int64_t, std::int64_t>> solutions;  // sorted, duplicate-free

    std::size_t count() const { return solutions.size(); }
    bool contains(std::int64_t a, std::int64_t b) const {
        return std::binary_search(solutions.begin(), solutions.end(), std::make_pair(a, b));
    }
};

/// Solutions of a^2 + ab + b^2 = n. Since H(a,b) >= 3a^2/4 and >= 3b^2/4,
/// the scan box |a|, |b| <= ceil(2 sqrt(n/3)) is exhaustive.
inline RepSolutionSet hex_reps(std::uint64_t n) {
    RepSolutionSet out{FormKind::hexagonal, n, {}};
    const std::int64_t bound = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(n) / 3.0))) + 1;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            if (hex_form(a, b) == static_cast<std::int64_t>(n)) out.solutions.emplace_back(a, b);
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

/// Solutions of a^2 + b^2 = n, scan box |a|, |b| <= ceil(sqrt(n)).
inline RepSolutionSet square_reps(std::uint64_t n) {
    RepSolutionSet out{FormKind::square, n, {}};
    const std::int64_t bound = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            if (square_form(a, b) == static_cast<std::int64_t>(n)) out.solutions.emplace_back(a, b);
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

/// Bulk shell counts: result[n] = |reps(n)| for all n <= limit, one pass
/// over the scan box instead of one box per n.
inline std::vector<std::int64_t> rep_counts_upto(FormKind form, std::uint64_t limit) {
    std::vector<std::int64_t> counts(limit + 1, 0);
    const auto lim = static_cast<std::int64_t>(limit);
    if (form == FormKind::hexagonal) {
        const std::int64_t bound = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(limit / 3.0))) + 1;
        for (std::int64_t a = -bound; a <= bound; ++a)
            for (std::int64_t b = -bound; b <= bound; ++b) {
                const std::int64_t v = hex_form(a, b);
                if (v <= lim) ++counts[static_cast<std::size_t>(v)];
            }
    } else {
        const std::int64_t bound = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(limit)))) + 1;
        for (std::int64_t a = -bound; a <= bound; ++a)
            for (std::int64_t b = -bound; b <= bound; ++b) {
                const std::int64_t v = square_form(a, b);
                if (v <= lim) ++counts[static_cast<std::size_t>(v)];
            }
    }
    return counts;
}

/// u(k): 0 if a prime q = 2 (mod 3) divides k to an odd power, else
/// 6 * prod (e_i + 1) over the primes p_i = 1 (mod 3). Factors of 3 are inert.
inline std::uint64_t u_of_k(std::uint64_t n) {
    if (n == 0) throw UsageError("u_of_k: n must be positive");
    std::uint64_t prod = 6;
    for (auto [p, e] : factorize(n).factors) {
        switch (p % 3) {
            case 1: prod *= static_cast<std::uint64_t>(e) + 1; break;
            case 2: if (e & 1) return 0; break;
            default: break;  // p == 3
        }
    }
    return prod;
}

/// v(k): 0 if a prime q = 3 (mod 4) divides k to an odd power, else
/// 4 * prod (e_i + 1) over the primes p_i = 1 (mod 4). The power of 2 is
/// inert, so v(2k) = v(k).
inline std::uint64_t v_of_k(std::uint64_t n) {
    if (n == 0) throw UsageError("v_of_k: n must be positive");
    std::uint64_t prod = 4;
    for (auto [p, e] : factorize(n).factors) {
        switch (p % 4) {
            case 1: prod *= static_cast<std::uint64_t>(e) + 1; break;
            case 3: if (e & 1) return 0; break;
            default: break;  // p == 2
        }
    }
    return prod;
}

/// 6 * (d_{3,1}(n) - d_{3,2}(n)) by naive divisor enumeration. Kept
/// independent of factorize() on purpose; must agree with u_of_k.
inline std::int64_t u_divisor_form(std::uint64_t n) {
    if (n == 0) throw UsageError("u_divisor_form: n must be positive");
    std::int64_t diff = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        const std::uint64_t e = n / d;
        for (std::uint64_t div : {d, e}) {
            const auto r = div % 3;
            if (r == 1) ++diff;
            else if (r == 2) --diff;
            if (d == e) break;  // square root counted once
        }
    }
    return 6 * diff;
}

/// 4 * (d_{4,1}(n) - d_{4,3}(n)) by naive divisor enumeration.
inline std::int64_t v_divisor_form(std::uint64_t n) {
    if (n == 0) throw UsageError("v_divisor_form: n must be positive");
    std::int64_t diff = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        const std::uint64_t e = n / d;
        for (std::uint64_t div : {d, e}) {
            const auto r = div % 4;
            if (r == 1) ++diff;
            else if (r == 3) --diff;
            if (d == e) break;
        }
    }
    return 4 * diff;
}

}  // namespace lattice_units
