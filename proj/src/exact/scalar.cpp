#include "exact/scalar.hpp"

#include <cmath>

namespace flatdeck {

bool is_square_free(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

Scalar::Scalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (!is_square_free(d)) throw FieldMismatch("field discriminant must be a square-free integer >= 1");
    a_.canonicalize();
    b_.canonicalize();
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
    }
    if (sgn(b_) == 0) d_ = 1;
}

Scalar Scalar::sqrt_of(long d) { return Scalar(Rational(0), Rational(1), d); }

void Scalar::adopt_field(const Scalar& o) {
    if (o.d_ == 1) return;
    if (d_ == 1) {
        d_ = o.d_;
        return;
    }
    if (d_ != o.d_) throw FieldMismatch("scalars from Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " +
                                        std::to_string(o.d_) + ") cannot be combined");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    adopt_field(o);
    a_ += o.a_;
    b_ += o.b_;
    if (sgn(b_) == 0) d_ = 1;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    adopt_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (sgn(b_) == 0) d_ = 1;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.d_ == 1 && d_ == 1) {
        a_ *= o.a_;
        return *this;
    }
    adopt_field(o);
    Rational na = a_ * o.a_ + b_ * o.b_ * d_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    if (sgn(b_) == 0) d_ = 1;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    if (o.d_ == 1) {
        adopt_field(o);
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
    Scalar inv(o.a_ / norm, -o.b_ / norm, o.d_);
    return *this *= inv;
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.d_ != y.d_) return false;  // b != 0 on at least one side
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = scalar_sign(x - y);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Scalar Scalar::conjugate() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

int scalar_sign(const Scalar& s) {
    int sa = sgn(s.rational_part());
    int sb = sgn(s.radical_part());
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 d
    Rational a2 = s.rational_part() * s.rational_part();
    Rational b2d = s.radical_part() * s.radical_part() * s.field();
    return cmp(a2, b2d) > 0 ? sa : sb;
}

Scalar abs(const Scalar& s) { return scalar_sign(s) < 0 ? -s : s; }

double Scalar::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_)); }

mpz_class Scalar::floor() const {
    if (is_rational()) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
        return q;
    }
    // start from the double estimate, then correct exactly
    mpz_class n(std::floor(to_double()));
    while (scalar_sign(*this - Scalar(Rational(n))) < 0) n -= 1;
    while (scalar_sign(*this - Scalar(Rational(n + 1))) >= 0) n += 1;
    return n;
}

Scalar mod_positive(const Scalar& x, const Scalar& m) {
    if (scalar_sign(m) <= 0) throw std::domain_error("modulus must be positive");
    Scalar q = x / m;
    return x - m * Scalar(Rational(q.floor()));
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
    if (is_rational()) return rational_to_string(a_);
    std::string rad = rational_to_string(abs(b_)) + "√" + std::to_string(d_);
    if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + rad;
    return rational_to_string(a_) + (sgn(b_) < 0 ? "-" : "+") + rad;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // decimal literals such as "0.5" are accepted and converted exactly
    if (auto dot = s.find('.'); dot != std::string::npos && s.find('/') == std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        mpz_class num;
        if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace flatdeck
