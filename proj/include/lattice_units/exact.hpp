/// @file exact.hpp
/// Exact scalar arithmetic: arbitrary-precision integers and rationals
/// (backed by GMP) plus the integer square-root helpers the enumeration
/// layers rely on. No floating point anywhere in this header.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lattice_units {

using Int = mpz_class;

/// Violated precondition (mismatched radicands, invalid parameters, ...).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1 after every
/// operation. Construction canonicalizes; arithmetic preserves it.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw UsageError("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ + y.v_)); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ - y.v_)); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ * y.v_)); }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw UsageError("Rational: division by zero");
        return Rational(mpq_class(x.v_ / y.v_));
    }
    Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
    Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
    Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
    friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
    friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
    friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

    double to_double() const { return v_.get_d(); }
    long double to_long_double() const {
        return static_cast<long double>(v_.get_num().get_d()) / static_cast<long double>(v_.get_den().get_d());
    }
    std::string str() const { return v_.get_str(); }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// floor(sqrt(n)) for n >= 0, exact.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw UsageError("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Exact integer square root: s with s*s == n, or empty. No floating point.
inline std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    return isqrt_floor(n);
}

inline std::optional<std::uint64_t> is_perfect_square(std::uint64_t n) {
    auto r = is_perfect_square(Int(static_cast<unsigned long>(n)));
    if (!r) return std::nullopt;
    return r->get_ui();
}

/// floor(c + sqrt(r)) for rationals c and r >= 0, computed exactly via
/// integer square roots with a +-1 correction step.
inline Int floor_add_sqrt(const Rational& c, const Rational& r) {
    if (r.sign() < 0) throw UsageError("floor_add_sqrt: negative radicand");
    // c + sqrt(r) = (A + sqrt(N)) / B with A = cn*rd, N = rn*rd*cd^2, B = cd*rd.
    const Int cn = c.numerator(), cd = c.denominator();
    const Int rn = r.numerator(), rd = r.denominator();
    const Int A = cn * rd;
    const Int N = rn * rd * cd * cd;
    const Int B = cd * rd;
    const Int s = isqrt_floor(N);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), Int(A + s).get_mpz_t(), B.get_mpz_t());
    // q is within 1 of the truth; fix against the exact predicate q*B - A <= sqrt(N).
    auto le_sqrt = [&](const Int& w) { return w <= 0 || w * w <= N; };
    while (le_sqrt((q + 1) * B - A)) ++q;
    while (!le_sqrt(q * B - A)) --q;
    return q;
}

/// ceil(c - sqrt(r)) for rationals c and r >= 0, exact.
inline Int ceil_sub_sqrt(const Rational& c, const Rational& r) {
    return -floor_add_sqrt(-c, r);
}

/// sqrt of a nonnegative rational when it is itself rational, else empty.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    auto sn = is_perfect_square(r.numerator());
    if (!sn) return std::nullopt;
    auto sd = is_perfect_square(r.denominator());
    if (!sd) return std::nullopt;
    return Rational(*sn, *sd);
}

}  // namespace lattice_units
