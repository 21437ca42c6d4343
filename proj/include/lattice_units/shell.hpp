/// @file shell.hpp
/// Complete enumeration of all coefficient vectors of a fixed squared
/// length, unit-vector classification against the predicted counts, and the
/// coefficient bijection between representations of 2n and n.
///
/// Enumeration strategy: squared length = scale^2 (P(x) + Q(x) sqrt(D)) with
/// P positive definite and rational, so |v|^2 = t (rational t) forces
/// P(x) = t / scale^2 and Q(x) = 0. Fincke-Pohst runs over the exact LDL^T
/// decomposition of P; interval endpoints are quadratic irrationals and are
/// bracketed by exact integer square roots with outward rounding, so
/// completeness is unconditional. Every candidate is confirmed through
/// sq_length before it is accepted.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lattice.hpp"
#include "repcount.hpp"

namespace lattice_units {

namespace detail {

struct LdlDecomposition {
    std::array<Rational, 4> diag;  // positive pivots
    Mat4Q lower;                   // unit lower-triangular factors
};

inline LdlDecomposition ldl(const Mat4Q& m) {
    LdlDecomposition out;
    for (auto& row : out.lower)
        for (auto& x : row) x = Rational(0);
    for (int j = 0; j < 4; ++j) {
        Rational dj = m[j][j];
        for (int k = 0; k < j; ++k) dj -= out.lower[j][k] * out.lower[j][k] * out.diag[k];
        if (dj.sign() <= 0) throw std::logic_error("ldl: form is not positive definite");
        out.diag[j] = dj;
        out.lower[j][j] = Rational(1);
        for (int i = j + 1; i < 4; ++i) {
            Rational v = m[i][j];
            for (int k = 0; k < j; ++k) v -= out.lower[i][k] * out.lower[j][k] * out.diag[k];
            out.lower[i][j] = v / dj;
        }
    }
    return out;
}

}  // namespace detail

/// The complete set { v : sq_length(v) = target }, target > 0 rational.
/// Output is sorted, hence identical across runs.
inline std::vector<CoeffVec> enumerate_shell(const LatticeSpec& spec, const Rational& target) {
    if (target.sign() <= 0) throw UsageError("enumerate_shell: target must be positive");
    const Rational t = target / spec.scale_sq();  // integer-lattice form target
    const auto dec = detail::ldl(spec.unscaled_trace_form());

    // With M = L D L^T:  x^T M x = sum_i D_i (x_i + c_i)^2,
    // c_i = sum_{j>i} L_{ji} x_j. Enumerate x_3 .. x_0 outermost-in.
    std::vector<CoeffVec> found;
    std::array<std::int64_t, 4> x{0, 0, 0, 0};

    auto center = [&](int i) {
        Rational c(0);
        for (int j = i + 1; j < 4; ++j) c += dec.lower[j][i] * Rational(static_cast<long>(x[j]));
        return c;
    };

    auto rec = [&](auto&& self, int i, const Rational& remaining) -> void {
        const Rational c = center(i);
        if (i == 0) {
            // D_0 (x_0 + c)^2 == remaining exactly; at most two candidates.
            const Rational r2 = remaining / dec.diag[0];
            auto root = rational_sqrt(r2);
            if (!root) return;
            for (int s : {1, -1}) {
                const Rational cand = Rational(s) * *root - c;
                if (!cand.is_integer()) continue;
                x[0] = static_cast<std::int64_t>(cand.numerator().get_si());
                CoeffVec v{x[0], x[1], x[2], x[3]};
                if (spec.sq_length(v) == QuadExt::from_rational(spec.radicand(), target)) found.push_back(v);
                if (root->is_zero()) break;  // +0 and -0 are the same candidate
            }
            return;
        }
        const Rational bound = remaining / dec.diag[i];
        const Int lo = ceil_sub_sqrt(-c, bound);
        const Int hi = floor_add_sqrt(-c, bound);
        for (Int xi = lo; xi <= hi; ++xi) {
            x[i] = xi.get_si();
            const Rational term = Rational(static_cast<long>(x[i])) + c;
            const Rational used = dec.diag[i] * term * term;
            if (used > remaining) continue;  // outward-rounded endpoint, filtered exactly
            self(self, i - 1, remaining - used);
        }
        x[i] = 0;
    };
    rec(rec, 3, t);
    std::sort(found.begin(), found.end());
    return found;
}

enum class UnitClass { trivial_first_plane, trivial_second_plane, diagonal, other };

inline const char* unit_class_name(UnitClass c) {
    switch (c) {
        case UnitClass::trivial_first_plane: return "trivial-first-plane";
        case UnitClass::trivial_second_plane: return "trivial-second-plane";
        case UnitClass::diagonal: return "diagonal";
        default: return "other";
    }
}

inline UnitClass classify_unit(const CoeffVec& v) {
    if (v.c == 0 && v.d == 0) return UnitClass::trivial_first_plane;
    if (v.a == 0 && v.b == 0) return UnitClass::trivial_second_plane;
    if (v.c == -v.a && v.d == -v.b) return UnitClass::diagonal;
    return UnitClass::other;
}

/// Enumerated unit vectors with per-vector classification and the
/// divisor-formula prediction: 12 + u(k) for L, 8 + v(k) for M,
/// 8 + v(2 * 2k) for the half-integer family.
struct UnitVectorReport {
    FamilyTag tag;
    std::vector<std::pair<CoeffVec, UnitClass>> units;  // sorted by vector
    std::uint64_t predicted = 0;
    std::size_t enumerated = 0;

    std::size_t class_count(UnitClass c) const {
        std::size_t n = 0;
        for (const auto& [v, cls] : units) n += cls == c;
        return n;
    }
    bool prediction_holds() const { return predicted == enumerated && class_count(UnitClass::other) == 0; }
};

inline UnitVectorReport unit_vectors(const LatticeSpec& spec) {
    UnitVectorReport report;
    report.tag = spec.tag();
    for (const CoeffVec& v : enumerate_shell(spec, Rational(1)))
        report.units.emplace_back(v, classify_unit(v));
    report.enumerated = report.units.size();
    switch (spec.family()) {
        case Family::L: report.predicted = 12 + u_of_k(spec.param()); break;
        case Family::M: report.predicted = 8 + v_of_k(spec.param()); break;
        default: report.predicted = 8 + v_of_k(2 * spec.param()); break;
    }
    return report;
}

/// (a, b, -a, -b) -> (a*, b*, -a*, -b*) with a* = (a+b)/2, b* = (a-b)/2,
/// defined when both sums are even; halves the square-form value exactly.
inline std::optional<CoeffVec> halving_map(const CoeffVec& v) {
    if (v.c != -v.a || v.d != -v.b) throw UsageError("halving_map: expects a diagonal vector (a, b, -a, -b)");
    if ((v.a + v.b) % 2 != 0 || (v.a - v.b) % 2 != 0) return std::nullopt;
    const std::int64_t as = (v.a + v.b) / 2, bs = (v.a - v.b) / 2;
    return CoeffVec{as, bs, -as, -bs};
}

/// Checks the representation-level bijection behind "M_{2k} and M_k/2 have
/// the same number of unit vectors": halving_map restricted to S-solutions
/// of 2n is well defined (2n = 2 mod 4 forces both parities), injective and
/// onto the S-solutions of n. n must be odd.
inline bool verify_same_count(std::uint64_t n) {
    if (n % 2 == 0) throw UsageError("verify_same_count: n must be odd");
    const auto reps2 = square_reps(2 * n);
    const auto reps1 = square_reps(n);
    std::vector<std::pair<std::int64_t, std::int64_t>> image;
    for (auto [a, b] : reps2.solutions) {
        auto mapped = halving_map(CoeffVec{a, b, -a, -b});
        if (!mapped) return false;  // parity obstruction: map not defined
        if (square_form(mapped->a, mapped->b) * 2 != square_form(a, b)) return false;
        image.emplace_back(mapped->a, mapped->b);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;  // not injective
    return image == reps1.solutions;  // surjective onto reps of n
}

}  // namespace lattice_units
