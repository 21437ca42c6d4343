/// @file quadext.hpp
/// Ordered exact arithmetic in the real quadratic extension Q(sqrt(d)):
/// values p + q*sqrt(d) with rational p, q and a fixed positive non-square
/// radicand d. One radicand per lattice; mixing radicands is a usage error.
#pragma once

#include <cmath>
#include <cstdint>

#include "exact.hpp"

namespace lattice_units {

class QuadExt {
public:
    /// d must be positive and not a perfect square; perfect squares have to
    /// be collapsed to Rational by the caller before ever reaching here.
    QuadExt(std::int64_t d, Rational p, Rational q)
        : d_(d), p_(std::move(p)), q_(std::move(q)) {
        if (d <= 0) throw UsageError("QuadExt: radicand must be positive");
        if (is_perfect_square(Int(static_cast<long>(d))))
            throw UsageError("QuadExt: radicand is a perfect square");
    }

    static QuadExt from_rational(std::int64_t d, Rational p) { return QuadExt(d, std::move(p), Rational(0)); }

    std::int64_t radicand() const { return d_; }
    const Rational& rational_part() const { return p_; }
    const Rational& surd_part() const { return q_; }
    bool is_rational() const { return q_.is_zero(); }

    QuadExt conjugate() const { return QuadExt(d_, p_, -q_); }
    QuadExt operator-() const { return QuadExt(d_, -p_, -q_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        return QuadExt(x.d_, x.p_ + y.p_, x.q_ + y.q_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        return QuadExt(x.d_, x.p_ - y.p_, x.q_ - y.q_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        const Rational d(static_cast<long>(x.d_));
        return QuadExt(x.d_, x.p_ * y.p_ + x.q_ * y.q_ * d, x.p_ * y.q_ + x.q_ * y.p_);
    }
    QuadExt operator*(const Rational& s) const { return QuadExt(d_, p_ * s, q_ * s); }
    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }

    /// Equality is componentwise; (p, q) determines the value because
    /// sqrt(d) is irrational.
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        check_same(x, y);
        return x.p_ == y.p_ && x.q_ == y.q_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// Sign of the real number p + q*sqrt(d), exact: immediate when p and q
    /// agree in sign, otherwise decided by comparing p^2 against q^2*d.
    int sign() const {
        const int sp = p_.sign(), sq = q_.sign();
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        const int cmp = (p_ * p_ - q_ * q_ * Rational(static_cast<long>(d_))).sign();
        // cmp == 0 would mean sqrt(d) is rational; the constructor rules that out.
        return sp > 0 ? cmp : -cmp;
    }

    double to_double() const { return p_.to_double() + q_.to_double() * std::sqrt(static_cast<double>(d_)); }

    std::string str() const { return p_.str() + " + " + q_.str() + "*sqrt(" + std::to_string(d_) + ")"; }

private:
    static void check_same(const QuadExt& x, const QuadExt& y) {
        if (x.d_ != y.d_) throw UsageError("QuadExt: mismatched radicands");
    }

    std::int64_t d_;
    Rational p_, q_;
};

inline QuadExt quad_add(const QuadExt& x, const QuadExt& y) { return x + y; }
inline QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }
inline int quad_sign(const QuadExt& x) { return x.sign(); }

}  // namespace lattice_units
