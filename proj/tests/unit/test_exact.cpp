#include <doctest.h>

#include "exact/linear.hpp"

#include <random>

using namespace flatdeck;

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }
Scalar s3(long a, long b) { return Scalar(Rational(a), Rational(b), 3); }

// brute-force oracle for the frame: smallest integer solution by search
bool frame_ok(const Mat2& g, long p, long r) {
    for (const Scalar* e : {&g.a, &g.b, &g.c, &g.d})
        if (!e->is_rational() || e->rational_part().get_den() != 1) return false;
    Vec2 img = g * Vec2{q(p), q(r)};
    return g.det() == q(1) && img == Vec2{q(1), q(0)};
}

}  // namespace

TEST_CASE("scalar sign") {
    CHECK(scalar_sign(Scalar(0)) == 0);
    CHECK(scalar_sign(s3(1, -1)) == -1);
    CHECK(scalar_sign(Scalar(Rational(7, 4), Rational(-1), 3)) == 1);
    // 49/16 vs 48/16 by plain rationals
    CHECK(Rational(49, 16) > Rational(3));
    CHECK(scalar_sign(Scalar(Rational(-7, 4), Rational(1), 3)) == -1);
    CHECK(scalar_sign(Scalar(Rational(5, 3), Rational(-1), 3)) == -1);
}

TEST_CASE("scalar field axioms on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-9, 9);
    auto draw = [&] {
        int den = dist(rng);
        if (den == 0) den = 1;
        return Scalar(Rational(dist(rng), std::abs(den)), Rational(dist(rng), 7), 3);
    };
    for (int i = 0; i < 200; ++i) {
        Scalar a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        if (!a.is_zero()) CHECK(scalar_sign(a) * scalar_sign(-a) == -1);
        // sign agrees with the floating estimate away from zero
        double x = a.to_double();
        if (std::abs(x) > 1e-9) CHECK(scalar_sign(a) == (x > 0 ? 1 : -1));
    }
}

TEST_CASE("scalar field mismatch") {
    Scalar a(Rational(0), Rational(1), 2);
    Scalar b(Rational(0), Rational(1), 3);
    CHECK_THROWS_AS(a + b, FieldMismatch);
    CHECK_NOTHROW(a + q(3));
    CHECK_THROWS_AS(Scalar(Rational(1), Rational(1), 4), FieldMismatch);
}

TEST_CASE("scalar floor and mod") {
    CHECK(q(7, 2).floor() == 3);
    CHECK(q(-7, 2).floor() == -4);
    CHECK(s3(0, 1).floor() == 1);
    CHECK(s3(0, -1).floor() == -2);
    CHECK(mod_positive(q(7), q(5)) == q(2));
    CHECK(mod_positive(q(-1, 2), q(5)) == q(9, 2));
    CHECK(mod_positive(s3(1, 1), q(2)) == s3(-1, 1));
}

TEST_CASE("scalar text") {
    CHECK(q(3, 4).to_string() == "3/4");
    CHECK(s3(1, -1).to_string() == "1-1√3");
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("cross products") {
    CHECK(cross({q(1), q(0)}, {q(0), q(1)}) == q(1));
    CHECK(cross({q(2), q(3)}, {q(2), q(3)}) == q(0));
    CHECK(cross({q(1), q(2)}, {q(3), q(1)}) == q(-5));
}

TEST_CASE("direction frames") {
    CHECK(direction_frame(1, 0) == Mat2::identity());
    CHECK(direction_frame(0, 1) == Mat2{0, 1, -1, 0});
    CHECK(direction_frame(2, 3) == Mat2{-1, 1, -3, 2});
    for (long p = -12; p <= 12; ++p) {
        for (long r = -12; r <= 12; ++r) {
            if (std::gcd(p, r) != 1) {
                if (p != 0 || r != 0) CHECK_THROWS(direction_frame(p, r));
                continue;
            }
            CHECK(frame_ok(direction_frame(p, r), p, r));
        }
    }
    CHECK_THROWS(direction_frame(0, 0));
}

TEST_CASE("directions normalize") {
    Direction a(Vec2{q(-2), q(-4)});
    CHECK(a.is_integral());
    CHECK(a.p() == 1);
    CHECK(a.q() == 2);
    CHECK(a == Direction::integer(1, 2));
    Direction b(Vec2{q(0), q(-3)});
    CHECK(b == Direction::integer(0, 1));
    Direction c(Vec2{s3(0, 1), q(1)});
    CHECK(!c.is_integral());
    Mat2 f = c.frame();
    Vec2 img = f * c.vector();
    CHECK(img.y.is_zero());
    CHECK(f.det() == q(1));
    CHECK(scalar_sign(img.x) > 0);
    CHECK(Direction::integer(1, -1) < Direction::integer(1, 0));
    CHECK(Direction::integer(1, 5) < Direction::integer(0, 1));
}

TEST_CASE("angular order") {
    Vec2 e{q(1), q(0)}, n{q(0), q(1)}, w{q(-1), q(0)}, s{q(0), q(-1)};
    CHECK(ccw_before(e, n, w));
    CHECK(ccw_before(e, w, s));
    CHECK(!ccw_before(e, s, n));
    CHECK(ccw_before(e, e, n));
    CHECK(sector_contains(e, n, e));
    CHECK(!sector_contains(e, n, n));
    CHECK(sector_contains(n, e, s));
}
