#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flatdeck {

// Raised when two scalars from different quadratic fields are combined,
// or when a field discriminant is not square-free.
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Rational = mpq_class;

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt d).
// 
// Rational scalars (b == 0) carry d = 1 and combine with any field.  Two
// irrational scalars must agree on d.  Everything here is exact: sign and
// ordering never touch floating point.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
    Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
    Scalar(Rational a, Rational b, long d);

    static Scalar sqrt_of(long d);  // sqrt(d) itself, d square-free

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long field() const { return d_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    // Galois conjugate a - b*sqrt(d).
    Scalar conjugate() const;
    // Largest integer n with n <= *this.
    mpz_class floor() const;
    double to_double() const;

    // "p/q" when rational, otherwise "p/q+r/s√d" (or "-r/s√d").
    std::string to_string() const;

private:
    void adopt_field(const Scalar& o);

    Rational a_{0};
    Rational b_{0};
    long d_ = 1;
};

// Exact sign of a + b*sqrt(d): -1, 0 or +1.
int scalar_sign(const Scalar& s);

Scalar abs(const Scalar& s);
// x reduced into [0, m) for m > 0.
Scalar mod_positive(const Scalar& x, const Scalar& m);

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

// True when d > 1 has no repeated prime factor (d = 1 is accepted as Q).
bool is_square_free(long d);

}  // namespace flatdeck
