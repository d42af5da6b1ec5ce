#include "exact/linear.hpp"

#include <numeric>
#include <stdexcept>

namespace flatdeck {

bool same_direction(const Vec2& u, const Vec2& v) {
    return scalar_sign(cross(u, v)) == 0 && scalar_sign(dot(u, v)) > 0;
}

namespace {

// 0 for angles in [0, pi) measured from origin, 1 for [pi, 2 pi)
int half_of(const Vec2& origin, const Vec2& a) {
    int c = scalar_sign(cross(origin, a));
    if (c > 0) return 0;
    if (c == 0 && scalar_sign(dot(origin, a)) > 0) return 0;
    return 1;
}

}  // namespace

bool ccw_before(const Vec2& origin, const Vec2& a, const Vec2& b) {
    int ha = half_of(origin, a);
    int hb = half_of(origin, b);
    if (ha != hb) return ha < hb;
    return scalar_sign(cross(a, b)) > 0;
}

bool sector_contains(const Vec2& from, const Vec2& to, const Vec2& dir) {
    return ccw_before(from, dir, to);
}

Mat2 Mat2::inverse() const {
    Scalar dt = det();
    if (dt.is_zero()) throw std::domain_error("singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

namespace {

// returns g = gcd(a, b) >= 0 with x*a + y*b = g
long ext_gcd(long a, long b, long& x, long& y) {
    long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long qt = old_r / r;
        long tmp = old_r - qt * r;
        old_r = r;
        r = tmp;
        tmp = old_s - qt * s;
        old_s = s;
        s = tmp;
        tmp = old_t - qt * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

}  // namespace

Mat2 direction_frame(long p, long q) {
    if (p == 0 && q == 0) throw std::invalid_argument("direction (0,0) has no frame");
    long x = 0, y = 0;
    long g = ext_gcd(p, q, x, y);
    if (g != 1) throw std::invalid_argument("direction (" + std::to_string(p) + "," + std::to_string(q) +
                                            ") is not primitive");
    return {Scalar(x), Scalar(y), Scalar(-q), Scalar(p)};
}

Direction::Direction(Vec2 v) : v_(std::move(v)) {
    if (v_.is_zero()) throw std::invalid_argument("zero direction vector");
    int lead = v_.x.is_zero() ? scalar_sign(v_.y) : scalar_sign(v_.x);
    if (lead < 0) v_ = -v_;
    // a rational ratio means the direction is integral: clear denominators
    Scalar ratio_base = v_.x.is_zero() ? v_.y : v_.x;
    Scalar ox = v_.x / ratio_base, oy = v_.y / ratio_base;
    bool rational_ratio = ox.is_rational() && oy.is_rational();
    if (rational_ratio) {
        Rational rx = ox.rational_part(), ry = oy.rational_part();
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), rx.get_den_mpz_t(), ry.get_den_mpz_t());
        mpz_class px = rx.get_num() * (l / rx.get_den());
        mpz_class py = ry.get_num() * (l / ry.get_den());
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), px.get_mpz_t(), py.get_mpz_t());
        px /= g;
        py /= g;
        if (!px.fits_slong_p() || !py.fits_slong_p()) throw std::overflow_error("direction too large");
        p_ = px.get_si();
        q_ = py.get_si();
        integral_ = true;
        v_ = {Scalar(p_), Scalar(q_)};
    }
}

Direction Direction::integer(long p, long q) { return Direction(Vec2{Scalar(p), Scalar(q)}); }

Mat2 Direction::frame() const {
    if (integral_) return direction_frame(p_, q_);
    // non-integral directions are never vertical, so x > 0 here
    return {Scalar(1) / v_.x, Scalar(0), -v_.y, v_.x};
}

std::string Direction::to_string() const {
    if (integral_) return std::to_string(p_) + "," + std::to_string(q_);
    return v_.to_string();
}

bool operator<(const Direction& x, const Direction& y) {
    // normalized directions have angle in (-pi/2, pi/2]; order by increasing
    // slope, vertical last
    const Vec2 origin{Scalar(0), Scalar(-1)};
    return ccw_before(origin, x.v_, y.v_);
}

}  // namespace flatdeck
