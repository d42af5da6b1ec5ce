#include <doctest.h>

#include "corpus/basic.hpp"
#include "deform/deform.hpp"

#include <algorithm>

using namespace flatdeck;

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }

const Direction H = Direction::integer(1, 0);
const Direction V = Direction::integer(0, 1);

Decomposition periodic(const PolygonSurface& s, const Direction& d) { return require_periodic(s, d, Budget::default_for(s)); }

int simple_index(const Decomposition& d) {
    for (int i = 0; i < static_cast<int>(d.cylinders.size()); ++i)
        if (d.cylinders[i].simple()) return i;
    return -1;
}

std::vector<Scalar> circumferences_sq(const Decomposition& d) {
    std::vector<Scalar> out;
    for (const auto& c : d.cylinders) out.push_back(norm2(c.core_holonomy));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("identity deformation") {
    auto s = s1_surface();
    auto b = Budget::default_for(s);
    for (const auto& dir : {H, V}) {
        auto out = cylinder_deform(s, {dir, {0}, q(0), q(1)}, b);
        CHECK(surfaces_isomorphic(s, out, H, b));
        CHECK(surfaces_isomorphic(s, out, V, b));
    }
}

TEST_CASE("full shear of S1 is the global unipotent") {
    auto s = s1_surface();
    auto b = Budget::default_for(s);
    auto out = cylinder_deform(s, {H, {0}, q(1), q(1)}, b);
    CHECK(surfaces_isomorphic(out, apply_matrix(s, shear_matrix(q(1))), H, b));
    CHECK(area(out) == area(s));
    // a quarter shear is a different surface
    auto other = cylinder_deform(s, {H, {0}, q(1, 4), q(1)}, b);
    CHECK_FALSE(surfaces_isomorphic(other, s, H, b));
    CHECK(surfaces_isomorphic(other, apply_matrix(s, shear_matrix(q(1, 4))), H, b));
}

TEST_CASE("stretching the simple vertical cylinder of S1") {
    auto s = s1_surface();
    auto b = Budget::default_for(s);
    auto dv = periodic(s, V);
    int k = simple_index(dv);
    REQUIRE(k == 1);
    auto out = cylinder_deform(s, {V, {k}, q(0), q(2)}, b);
    auto dh = periodic(out, H);
    REQUIRE(dh.cylinders.size() == 1);
    CHECK(dh.cylinders[0].width == q(6));
    CHECK(area(out) == q(6));
    // widths of the deformed direction are untouched
    auto dv2 = periodic(out, V);
    std::vector<Scalar> w1, w2;
    for (const auto& c : dv.cylinders) w1.push_back(c.width);
    for (const auto& c : dv2.cylinders) w2.push_back(c.width);
    std::sort(w1.begin(), w1.end());
    std::sort(w2.begin(), w2.end());
    CHECK(w1 == w2);
}

TEST_CASE("deformation errors") {
    auto s = s1_surface();
    auto b = Budget::default_for(s);
    CHECK_THROWS_AS(cylinder_deform(s, {H, {}, q(1), q(1)}, b), std::invalid_argument);
    CHECK_THROWS_AS(cylinder_deform(s, {H, {3}, q(1), q(1)}, b), std::out_of_range);
    CHECK_THROWS_AS(cylinder_deform(s, {H, {0}, q(1), q(0)}, b), std::invalid_argument);
    CHECK_THROWS_AS(cylinder_deform(s, {H, {0}, q(0), q(1)}, Budget{q(1, 100)}), NotCertified);
}

TEST_CASE("portions on S1") {
    auto s = s1_surface();
    Homology h(s);
    auto dh = periodic(s, H), dv = periodic(s, V);
    int k = simple_index(dv);
    CHECK(portion(h, dh, 0, dv, {k}) == q(1, 5));
    CHECK(portion(h, dh, 0, dv, {}) == q(0));
    CHECK(portion(h, dh, 0, dv, {0, 1, 2}) == q(1));
    for (int i = 0; i < 3; ++i) {
        // a vertical cylinder lies inside the only horizontal one
        CHECK(portion(h, dv, i, dh, {0}) == q(1));
        CHECK(portion(h, dh, 0, dv, {i}) == dv.cylinders[i].area() / q(5));
    }
    CHECK(portion(s, H, 0, V, {k}, Budget::default_for(s)) == q(1, 5));
    CHECK_THROWS(portion(h, dh, 0, dh, {0}));
}

TEST_CASE("portions sum to one over every transverse direction") {
    auto s = s1_surface();
    Homology h(s);
    auto b = Budget::default_for(s);
    for (auto [p, r] : {std::pair{1L, 1L}, {1, -1}, {2, 1}, {1, 2}}) {
        auto d = decompose(s, Direction::integer(p, r), b);
        if (!std::holds_alternative<Decomposition>(d)) continue;
        const auto& dd = std::get<Decomposition>(d);
        std::vector<int> all(dd.cylinders.size());
        for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;
        auto dh = periodic(s, H);
        CHECK(portion(h, dh, 0, dd, all) == q(1));
    }
}

TEST_CASE("predicted circumference") {
    CHECK(predicted_circumference(q(5), q(1, 5), q(2)) == q(6));
    CHECK(predicted_circumference(q(7, 3), q(0), q(9)) == q(7, 3));
    CHECK(predicted_circumference(q(7, 3), q(2, 7), q(1)) == q(7, 3));
}

TEST_CASE("circumference law on S1") {
    auto s = s1_surface();
    Homology h(s);
    auto b = Budget::default_for(s);
    auto dh = periodic(s, H), dv = periodic(s, V);
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<int> set;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) set.push_back(i);
        for (const auto& t : {q(1, 2), q(2), q(3)}) {
            auto out = cylinder_deform(s, {V, set, q(0), t}, b);
            auto c = predicted_circumference(dh.cylinders[0].width, portion(h, dh, 0, dv, set), t);
            CHECK(circumferences_sq(periodic(out, H)) == std::vector<Scalar>{c * c});
        }
    }
}
