/// @file sieve.hpp
/// Segmented least-prime-factor scan over [1, limit] evaluating the
/// multiplicative counts u(k) / v(k) without per-k factorization, and the
/// lowest-k searches built on it. A 2*10^7 sweep finishes in about a second.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "repcount.hpp"

namespace lattice_units {

namespace detail {

inline std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t m = static_cast<std::uint64_t>(p) * p; m <= n; m += p) composite[m] = true;
    }
    return primes;
}

}  // namespace detail

/// Streams (k, u_of_k(k)) or (k, v_of_k(k)) for k = 1..limit in order.
/// The visitor returns false to stop early. Values are computed from the
/// prime decomposition recovered segment by segment, never by factorize().
template <typename Visitor>
void scan_rep_counts(FormKind form, std::uint64_t limit, Visitor&& visit) {
    const std::uint32_t modulus = form == FormKind::hexagonal ? 3 : 4;
    const std::uint32_t bad_residue = modulus - 1;
    const std::int32_t unit = form == FormKind::hexagonal ? 6 : 4;

    std::uint32_t root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 1;
    const auto primes = detail::primes_upto(root);

    constexpr std::uint64_t kSegment = 1u << 20;
    std::vector<std::uint64_t> residual(kSegment);
    std::vector<std::int32_t> value(kSegment);

    for (std::uint64_t lo = 1; lo <= limit; lo += kSegment) {
        const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
        const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
        for (std::size_t i = 0; i < len; ++i) {
            residual[i] = lo + i;
            value[i] = 1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t p64 = p;
            std::uint64_t first = ((lo + p64 - 1) / p64) * p64;
            for (std::uint64_t m = first; m <= hi; m += p64) {
                std::size_t i = static_cast<std::size_t>(m - lo);
                int e = 0;
                while (residual[i] % p64 == 0) { residual[i] /= p64; ++e; }
                const std::uint32_t r = p % modulus;
                if (r == 1) value[i] *= e + 1;
                else if (r == bad_residue && (e & 1)) value[i] = 0;
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            std::int64_t v = value[i];
            if (residual[i] > 1 && v != 0) {  // leftover prime > sqrt(limit), exponent 1
                const std::uint64_t r = residual[i] % modulus;
                if (r == 1) v *= 2;
                else if (r == bad_residue) v = 0;
            }
            if (!visit(lo + i, v == 0 ? 0 : static_cast<std::uint64_t>(unit * v))) return;
        }
    }
}

/// Smallest non-excluded k <= limit whose representation count equals
/// target_count; empty when the limit is exhausted (the caller distinguishes
/// "none exists" from "not found below limit").
inline std::optional<std::uint64_t> lowest_k(std::uint64_t target_count, FormKind form,
                                             const std::function<bool(std::uint64_t)>& excluded,
                                             std::uint64_t limit) {
    if (target_count == 0) throw UsageError("lowest_k: target count must be positive");
    std::optional<std::uint64_t> found;
    scan_rep_counts(form, limit, [&](std::uint64_t k, std::uint64_t cnt) {
        if (cnt == target_count && (!excluded || !excluded(k))) {
            found = k;
            return false;
        }
        return true;
    });
    return found;
}

/// One sweep answering many targets at once (the table commands).
/// Result[i] is the smallest non-excluded k with count == targets[i].
inline std::vector<std::optional<std::uint64_t>> lowest_k_bulk(const std::vector<std::uint64_t>& targets,
                                                               FormKind form,
                                                               const std::function<bool(std::uint64_t)>& excluded,
                                                               std::uint64_t limit) {
    std::vector<std::optional<std::uint64_t>> out(targets.size());
    std::size_t remaining = targets.size();
    scan_rep_counts(form, limit, [&](std::uint64_t k, std::uint64_t cnt) {
        if (cnt != 0 && (!excluded || !excluded(k))) {
            for (std::size_t i = 0; i < targets.size(); ++i) {
                if (!out[i] && targets[i] == cnt) {
                    out[i] = k;
                    --remaining;
                }
            }
        }
        return remaining != 0;
    });
    return out;
}

}  // namespace lattice_units
