/// @file lattice.hpp
/// The three lattice families and their exact quadratic data.
///
/// Family members are spanned by four unit-length basis vectors in the
/// plane: {1, w1, wk, w1*wk} for L(k), {1, i, wk, i*wk} for M(k), and the
/// same basis divided by 2 for MHalf(2k), where
/// wk = ((2k-1) + i sqrt(4k-1)) / (2k) and w1 = (1 + i sqrt(3)) / 2.
///
/// Every inner product lives in Q(sqrt(D)) with D = 3(4k-1) (L) or 4k-1
/// (M, MHalf). The 4x4 Gram matrix over the reals has rank 2 (four vectors
/// in a plane), so its rational part and sqrt(D) part are kept separately:
/// squared length = scale^2 * (P(x) + Q(x) sqrt(D)), where the rational
/// quadratic form P is positive definite whenever the parameter is
/// non-degenerate. P is the trace form of the two Galois embeddings and is
/// what the shell enumeration runs on; |v| = t requires P = t and Q = 0.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "quadext.hpp"

namespace lattice_units {

enum class Family { L, M, MHalf };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::L: return "L";
        case Family::M: return "M";
        default: return "MHALF";
    }
}

/// Family selector plus integer parameter: k for L and M, the odd integer
/// 2k >= 3 for the half-integer family (matching the tables' "2k" row label).
struct FamilyTag {
    Family family;
    std::uint64_t param;

    bool operator==(const FamilyTag&) const = default;
};

inline FamilyTag make_tag(Family f, std::uint64_t param) {
    if (param == 0) throw UsageError("family parameter must be positive");
    if (f == Family::MHalf) {
        if (param % 2 == 0 || param < 3)
            throw UsageError("MHalf parameter is the odd integer 2k and must be >= 3");
    }
    return FamilyTag{f, param};
}

/// Witness s of the rank collapse, when there is one:
/// L(k) collapses iff 4k-1 = 3 s^2, MHalf(2k) iff 2(2k)-1 = s^2,
/// M(k) never (-1 is not a quadratic residue mod 4).
inline std::optional<Int> degeneracy_witness(const FamilyTag& tag) {
    switch (tag.family) {
        case Family::L: {
            const Int m = Int(4) * static_cast<unsigned long>(tag.param) - 1;
            if (m % 3 != 0) return std::nullopt;
            return is_perfect_square(Int(m / 3));
        }
        case Family::M:
            return std::nullopt;
        default:
            return is_perfect_square(Int(Int(2) * static_cast<unsigned long>(tag.param) - 1));
    }
}

inline bool is_degenerate(const FamilyTag& tag) { return degeneracy_witness(tag).has_value(); }

/// Thrown when a collapsed (rank-2) parameter is used to build a lattice.
struct DegenerateLatticeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Integer coefficient 4-tuple (a, b, c, d) of lattice coordinates.
struct CoeffVec {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    bool operator==(const CoeffVec&) const = default;
    auto operator<=>(const CoeffVec&) const = default;
    CoeffVec operator-() const { return {-a, -b, -c, -d}; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    std::int64_t operator[](int i) const { return i == 0 ? a : i == 1 ? b : i == 2 ? c : d; }
};

using Mat4Q = std::array<std::array<Rational, 4>, 4>;

class LatticeSpec {
public:
    /// Builds the exact spec; throws DegenerateLatticeError (naming the
    /// collapse witness) for excluded parameters.
    static LatticeSpec make(const FamilyTag& tag) { return LatticeSpec(tag); }

    const FamilyTag& tag() const { return tag_; }
    Family family() const { return tag_.family; }
    std::uint64_t param() const { return tag_.param; }

    /// Radicand D of the quadratic extension carrying the inner products.
    std::int64_t radicand() const { return radicand_; }

    /// Basis scale: 1 for L and M, 1/2 for MHalf.
    const Rational& scale() const { return scale_; }
    const Rational& scale_sq() const { return scale_sq_; }

    /// Gram entry <basis_i, basis_j> as an element of Q(sqrt(D)), scale
    /// included. Symmetric; diagonal = scale^2 * (1,1,1,1) exactly.
    QuadExt gram(int i, int j) const {
        return QuadExt(radicand_, scale_sq_ * trace_form_[i][j], scale_sq_ * surd_form_[i][j]);
    }

    /// Rational part of the Gram *without* the scale^2 factor: the positive
    /// definite integer-lattice form the shell enumeration runs on.
    const Mat4Q& unscaled_trace_form() const { return trace_form_; }
    /// sqrt(D) coefficient of the unscaled Gram.
    const Mat4Q& unscaled_surd_form() const { return surd_form_; }

    /// Exact squared length of a coefficient vector, closed form:
    ///   L:     P = H(a,b) + H(c,d) + (2k-1)/k (ac + bd + (ad+bc)/2),
    ///          Q = (bc - ad) / (2k)
    ///   M:     P = S(a,b) + S(c,d) + (2k-1)/k (ac + bd),
    ///          Q = (bc - ad) / k
    /// (MHalf uses the M form at k = 2k/2 and multiplies by scale^2.)
    /// Verified in the test suite against the Gram quadratic form and a
    /// floating-point evaluation.
    QuadExt sq_length(const CoeffVec& v) const {
        const Rational a(static_cast<long>(v.a)), b(static_cast<long>(v.b));
        const Rational c(static_cast<long>(v.c)), d(static_cast<long>(v.d));
        Rational p, q;
        if (tag_.family == Family::L) {
            const Rational k(static_cast<long>(tag_.param));
            const Rational w = (Rational(2) * k - Rational(1)) / k;
            p = a * a + a * b + b * b + c * c + c * d + d * d
                + w * (a * c + b * d + (a * d + b * c) / Rational(2));
            q = (b * c - a * d) / (Rational(2) * k);
        } else {
            // M at integer k, MHalf at half-integer k = param/2.
            const Rational k = tag_.family == Family::M
                                   ? Rational(static_cast<long>(tag_.param))
                                   : Rational(static_cast<long>(tag_.param), 2);
            const Rational w = (Rational(2) * k - Rational(1)) / k;
            p = a * a + b * b + c * c + d * d + w * (a * c + b * d);
            q = (b * c - a * d) / k;
        }
        return QuadExt(radicand_, scale_sq_ * p, scale_sq_ * q);
    }

    /// Same value computed through the Gram quadratic form v^T G v; the
    /// independent algebraic route used by the verification suite.
    QuadExt sq_length_gram(const CoeffVec& v) const {
        QuadExt acc = QuadExt::from_rational(radicand_, Rational(0));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const Rational xixj(static_cast<long>(v[i]) * v[j]);
                acc += gram(i, j) * xixj;
            }
        return acc;
    }

    /// |1 - wk|^2 = 1/k exactly (2/(2k) for the half-integer family).
    Rational one_minus_omega_norm() const {
        if (tag_.family == Family::MHalf) return Rational(2, static_cast<long>(tag_.param));
        return Rational(1, static_cast<long>(tag_.param));
    }

    /// Planar coordinates of a coefficient vector (display / float oracle).
    std::array<double, 2> embed(const CoeffVec& v) const {
        const double k = tag_.family == Family::MHalf ? tag_.param / 2.0 : static_cast<double>(tag_.param);
        const double re_wk = (2.0 * k - 1.0) / (2.0 * k);
        const double im_wk = std::sqrt(4.0 * k - 1.0) / (2.0 * k);
        double re1, im1;
        if (tag_.family == Family::L) { re1 = 0.5; im1 = std::sqrt(3.0) / 2.0; }
        else { re1 = 0.0; im1 = 1.0; }
        const double s = scale_.to_double();
        const double re = v.a + v.b * re1 + v.c * re_wk + v.d * (re1 * re_wk - im1 * im_wk);
        const double im = v.b * im1 + v.c * im_wk + v.d * (re1 * im_wk + im1 * re_wk);
        return {s * re, s * im};
    }

private:
    explicit LatticeSpec(const FamilyTag& tag) : tag_(tag) {
        if (tag.family == Family::MHalf && (tag.param % 2 == 0 || tag.param < 3))
            throw UsageError("MHalf parameter is the odd integer 2k and must be >= 3");
        if (auto s = degeneracy_witness(tag)) {
            const auto k = static_cast<unsigned long>(tag.param);
            std::string msg = "the lattice is only 2-dimensional: ";
            if (tag.family == Family::L)
                msg += "4*" + std::to_string(k) + "-1 = " + Int(Int(4) * k - 1).get_str() + " = 3*" + s->get_str() + "^2";
            else
                msg += "2*" + std::to_string(k) + "-1 = " + Int(Int(2) * k - 1).get_str() + " = " + s->get_str() + "^2";
            throw DegenerateLatticeError(msg);
        }

        const long k = static_cast<long>(tag.param);
        if (tag.family == Family::L) {
            radicand_ = 3 * (4 * k - 1);
            scale_ = Rational(1);
            const Rational w(2 * k - 1, 2 * k);   // Re wk
            const Rational h = w / Rational(2);
            const Rational qc(1, 4 * k);          // sqrt(D) / (4k)
            const Rational half(1, 2);
            trace_form_ = {{{Rational(1), half, w, h},
                            {half, Rational(1), h, w},
                            {w, h, Rational(1), half},
                            {h, w, half, Rational(1)}}};
            surd_form_ = zero_matrix();
            surd_form_[0][3] = surd_form_[3][0] = -qc;
            surd_form_[1][2] = surd_form_[2][1] = qc;
        } else {
            // M at integer k has D = 4k-1; MHalf(2k) has D = 2*(2k)-1 and the
            // same shape with k = (2k)/2, i.e. w = (2k-1)/(2k) in terms of the
            // odd parameter.
            const bool half = tag.family == Family::MHalf;
            radicand_ = half ? 2 * k - 1 : 4 * k - 1;
            scale_ = half ? Rational(1, 2) : Rational(1);
            const Rational w = half ? Rational(k - 1, k) : Rational(2 * k - 1, 2 * k);
            const Rational qc = half ? Rational(1, k) : Rational(1, 2 * k);  // Im wk = sqrt(D) * qc
            const Rational zero(0), one(1);
            trace_form_ = {{{one, zero, w, zero},
                            {zero, one, zero, w},
                            {w, zero, one, zero},
                            {zero, w, zero, one}}};
            surd_form_ = zero_matrix();
            surd_form_[0][3] = surd_form_[3][0] = -qc;
            surd_form_[1][2] = surd_form_[2][1] = qc;
        }
        scale_sq_ = scale_ * scale_;
        verify_structure();
    }

    static Mat4Q zero_matrix() {
        Mat4Q m;
        for (auto& row : m)
            for (auto& x : row) x = Rational(0);
        return m;
    }

    /// Leading principal minor of order n (n <= 4), Laplace expansion.
    static Rational minor_det(const Mat4Q& m, int n) {
        if (n == 1) return m[0][0];
        if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        Rational det(0);
        for (int j = 0; j < n; ++j) {
            Mat4Q sub{};
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                for (int r = 1; r < n; ++r) sub[r - 1][cc] = m[r][c];
                ++cc;
            }
            const Rational term = m[0][j] * minor_det(sub, n - 1);
            det = (j % 2 == 0) ? det + term : det - term;
        }
        return det;
    }

    void verify_structure() const {
        // Real Gram of four plane vectors: rank 2. Leading minors of the
        // full Gram are (+, +, 0, 0); the trace form P must be genuinely
        // positive definite (all four minors positive).
        auto full_minor = [&](int n) {
            // det over Q(sqrt(D)) of the leading n x n block of P + Q sqrt(D)
            // computed by expansion in QuadExt.
            if (n == 1) return gram(0, 0);
            if (n == 2) return gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
            // 3x3 and 4x4 via Laplace expansion on QuadExt values.
            auto q = [&](int i, int j) { return gram(i, j); };
            auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
                return q(r0, c0) * (q(r1, c1) * q(r2, c2) - q(r1, c2) * q(r2, c1))
                     - q(r0, c1) * (q(r1, c0) * q(r2, c2) - q(r1, c2) * q(r2, c0))
                     + q(r0, c2) * (q(r1, c0) * q(r2, c1) - q(r1, c1) * q(r2, c0));
            };
            if (n == 3) return det3(0, 1, 2, 0, 1, 2);
            QuadExt det = QuadExt::from_rational(radicand_, Rational(0));
            for (int j = 0; j < 4; ++j) {
                std::array<int, 3> cols{};
                int cc = 0;
                for (int c = 0; c < 4; ++c)
                    if (c != j) cols[cc++] = c;
                const QuadExt term = q(0, j) * det3(1, 2, 3, cols[0], cols[1], cols[2]);
                det = (j % 2 == 0) ? det + term : det - term;
            }
            return det;
        };
        const Rational zero(0);
        if (full_minor(1).sign() <= 0 || full_minor(2).sign() <= 0)
            throw std::logic_error("LatticeSpec: leading Gram minors 1,2 must be positive");
        if (full_minor(3) != QuadExt::from_rational(radicand_, zero) ||
            full_minor(4) != QuadExt::from_rational(radicand_, zero))
            throw std::logic_error("LatticeSpec: Gram must have rank 2 (planar basis)");
        for (int n = 1; n <= 4; ++n)
            if (minor_det(trace_form_, n).sign() <= 0)
                throw std::logic_error("LatticeSpec: trace form must be positive definite");
    }

    FamilyTag tag_;
    std::int64_t radicand_ = 0;
    Rational scale_, scale_sq_;
    Mat4Q trace_form_;  // rational part of the unscaled Gram
    Mat4Q surd_form_;   // sqrt(D) coefficient of the unscaled Gram
};

inline LatticeSpec make_lattice(const FamilyTag& tag) { return LatticeSpec::make(tag); }
inline LatticeSpec make_lattice(Family f, std::uint64_t param) { return LatticeSpec::make(make_tag(f, param)); }

}  // namespace lattice_units
