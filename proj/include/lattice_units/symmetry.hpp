/// @file symmetry.hpp
/// Integer coefficient matrices generating the length-preserving symmetry
/// groups: the order-6 hexagonal rotation (multiplication by w1, acting per
/// plane via w1^2 = w1 - 1), the order-4 square rotation (multiplication by
/// i), the reflection (a d)(b c), and for the exceptional M(1) the order-12
/// rotation by a primitive 12th root of unity. Group order is computed by
/// breadth-first closure; Gram invariance is checked exactly over Q(sqrt(D)).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lattice.hpp"

namespace lattice_units {

struct IntMatrix4 {
    std::array<std::array<std::int64_t, 4>, 4> m{};

    static IntMatrix4 identity() {
        IntMatrix4 e;
        for (int i = 0; i < 4; ++i) e.m[i][i] = 1;
        return e;
    }

    friend IntMatrix4 operator*(const IntMatrix4& x, const IntMatrix4& y) {
        IntMatrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                std::int64_t s = 0;
                for (int k = 0; k < 4; ++k) s += x.m[i][k] * y.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    bool operator==(const IntMatrix4&) const = default;
    auto operator<=>(const IntMatrix4&) const = default;

    std::int64_t det() const {
        auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
            return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1])
                 - m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0])
                 + m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
        };
        std::int64_t d = 0;
        const std::array<std::array<int, 3>, 4> cols{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
        for (int j = 0; j < 4; ++j) {
            const auto& c = cols[j];
            const std::int64_t term = m[0][j] * minor3(1, 2, 3, c[0], c[1], c[2]);
            d += (j % 2 == 0) ? term : -term;
        }
        return d;
    }
};

inline CoeffVec apply(const IntMatrix4& g, const CoeffVec& v) {
    std::array<std::int64_t, 4> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += g.m[i][j] * v[j];
    return CoeffVec{out[0], out[1], out[2], out[3]};
}

namespace detail {

inline IntMatrix4 block_rotation(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11) {
    IntMatrix4 g;
    g.m[0][0] = m00; g.m[0][1] = m01;
    g.m[1][0] = m10; g.m[1][1] = m11;
    g.m[2][2] = m00; g.m[2][3] = m01;
    g.m[3][2] = m10; g.m[3][3] = m11;
    return g;
}

}  // namespace detail

/// Multiplication by w1 on both planes: (a, b) -> (-b, a+b).
inline IntMatrix4 hex_rotation() { return detail::block_rotation(0, -1, 1, 1); }

/// Multiplication by i on both planes: (a, b) -> (-b, a).
inline IntMatrix4 square_rotation() { return detail::block_rotation(0, -1, 1, 0); }

/// The coefficient permutation (a d)(b c).
inline IntMatrix4 swap_reflection() {
    IntMatrix4 g;
    g.m[0][3] = g.m[1][2] = g.m[2][1] = g.m[3][0] = 1;
    return g;
}

/// M(1) only: multiplication by the primitive 12th root zeta = (sqrt3 + i)/2
/// expressed on the basis {1, i, w1, i w1}; zeta*1 = i - i*w1, zeta*i = w1 - 1,
/// zeta*w1 = i, zeta*(i w1) = -1.
inline IntMatrix4 twelfth_root_rotation() {
    IntMatrix4 g;
    g.m[1][0] = 1; g.m[3][0] = -1;  // image of 1
    g.m[0][1] = -1; g.m[2][1] = 1;  // image of i
    g.m[1][2] = 1;                  // image of w1
    g.m[0][3] = -1;                 // image of i w1
    return g;
}

/// M(1) only: complex conjugation; conj(1) = 1, conj(i) = -i,
/// conj(w1) = 1 - w1, conj(i w1) = -i + i w1.
inline IntMatrix4 conjugation_m1() {
    IntMatrix4 g;
    g.m[0][0] = 1;
    g.m[1][1] = -1;
    g.m[0][2] = 1; g.m[2][2] = -1;
    g.m[1][3] = -1; g.m[3][3] = 1;
    return g;
}

/// Exact check of m^T G m == G over Q(sqrt(D)).
inline bool preserves_gram(const LatticeSpec& spec, const IntMatrix4& g) {
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            QuadExt acc = QuadExt::from_rational(spec.radicand(), Rational(0));
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s) {
                    if (g.m[r][i] == 0 || g.m[s][j] == 0) continue;
                    acc += spec.gram(r, s) * Rational(static_cast<long>(g.m[r][i] * g.m[s][j]));
                }
            if (acc != spec.gram(i, j)) return false;
        }
    return true;
}

/// Generators of the symmetry group acting on coefficient vectors.
/// L family: hexagonal rotation + reflection (dihedral of order 12).
/// M family: square rotation + reflection (order 8); M(1) additionally the
/// order-12 rotation, extending to the order-24 dihedral group.
inline std::vector<IntMatrix4> generators(const LatticeSpec& spec) {
    std::vector<IntMatrix4> gens;
    if (spec.family() == Family::L)
        gens.push_back(hex_rotation());
    else
        gens.push_back(square_rotation());
    gens.push_back(swap_reflection());
    if (spec.family() == Family::M && spec.param() == 1) gens.push_back(twelfth_root_rotation());
    return gens;
}

/// Size of the multiplicative closure (identity included), or empty if it
/// exceeds cap.
inline std::optional<std::size_t> group_order(const std::vector<IntMatrix4>& gens, std::size_t cap) {
    std::set<IntMatrix4> closure{IntMatrix4::identity()};
    std::vector<IntMatrix4> frontier{IntMatrix4::identity()};
    while (!frontier.empty()) {
        std::vector<IntMatrix4> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                IntMatrix4 prod = g * h;
                if (closure.insert(prod).second) {
                    if (closure.size() > cap) return std::nullopt;
                    next.push_back(prod);
                }
            }
        frontier = std::move(next);
    }
    return closure.size();
}

/// The full closure as a list (for unit-set invariance checks).
inline std::vector<IntMatrix4> group_closure(const std::vector<IntMatrix4>& gens, std::size_t cap) {
    std::set<IntMatrix4> closure{IntMatrix4::identity()};
    std::vector<IntMatrix4> frontier{IntMatrix4::identity()};
    while (!frontier.empty()) {
        std::vector<IntMatrix4> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                IntMatrix4 prod = g * h;
                if (closure.insert(prod).second) {
                    if (closure.size() > cap) throw UsageError("group_closure: cap exceeded");
                    next.push_back(prod);
                }
            }
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

}  // namespace lattice_units
