#pragma once

#include "exact/scalar.hpp"

#include <string>

namespace flatdeck {

struct Vec2 {
    Scalar x;
    Scalar y;

    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

inline Scalar cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Scalar dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
inline Scalar norm2(const Vec2& v) { return dot(v, v); }

// Same direction (parallel, positively proportional).
bool same_direction(const Vec2& u, const Vec2& v);

// Angular order around a point, measured counterclockwise from `origin`.
// Returns true when direction a is met strictly before direction b.
bool ccw_before(const Vec2& origin, const Vec2& a, const Vec2& b);

// Does the half-open counterclockwise sector [from, to) contain dir?
// The sector is assumed to have opening angle in (0, 2*pi).
bool sector_contains(const Vec2& from, const Vec2& to, const Vec2& dir);

struct Mat2 {
    Scalar a{1}, b{0}, c{0}, d{1};  // [[a, b], [c, d]]

    static Mat2 identity() { return {}; }
    Scalar det() const { return a * d - b * c; }
    Mat2 inverse() const;
    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& m) const {
        return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 shear_matrix(const Scalar& t) { return {1, t, 0, 1}; }
inline Mat2 diag_matrix(const Scalar& x, const Scalar& y) { return {x, 0, 0, y}; }

// Integer unimodular frame g with det g = 1 and g * (p, q) = (1, 0).
// Throws std::invalid_argument unless gcd(p, q) = 1.
Mat2 direction_frame(long p, long q);

// A direction in the plane, normalized so the first nonzero coordinate is
// positive; integer directions are stored primitive.
class Direction {
public:
    explicit Direction(Vec2 v);
    static Direction integer(long p, long q);

    const Vec2& vector() const { return v_; }
    bool is_integral() const { return integral_; }
    long p() const { return p_; }
    long q() const { return q_; }

    // Frame matrix sending this direction to the positive horizontal.
    // SL(2, Z) for integer directions; otherwise the determinant-one field
    // matrix [[1/x, 0], [-y, x]] for v = (x, y).
    Mat2 frame() const;

    std::string to_string() const;
    friend bool operator==(const Direction& x, const Direction& y) { return x.v_ == y.v_; }
    // Deterministic order used for reports: increasing slope, vertical last.
    friend bool operator<(const Direction& x, const Direction& y);

private:
    Vec2 v_;
    bool integral_ = false;
    long p_ = 0, q_ = 0;
};

}  // namespace flatdeck
