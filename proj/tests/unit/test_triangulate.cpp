#include <doctest.h>

#include "corpus/basic.hpp"
#include "corpus/scenarios.hpp"
#include "surface/triangulate.hpp"

using namespace flatdeck;

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }

// no vertex of a neighbour strictly inside a triangle's circumcircle
bool locally_delaunay(const PolygonSurface& s) {
    for (int t = 0; t < s.polygon_count(); ++t) {
        for (int i = 0; i < 3; ++i) {
            EdgeRef o = s.partner({t, i});
            if (o.poly == t) continue;
            Vec2 q1 = s.polygon(t)[i], r1 = q1 + s.polygon(t)[(i + 1) % 3];
            Vec2 sp = s.polygon(o.poly)[(o.edge + 1) % 3];
            Vec2 pa = Vec2{q(0), q(0)} - sp, qa = q1 - sp, ra = r1 - sp;
            Scalar det = pa.x * (qa.y * norm2(ra) - norm2(qa) * ra.y) - pa.y * (qa.x * norm2(ra) - norm2(qa) * ra.x) +
                         norm2(pa) * (qa.x * ra.y - qa.y * ra.x);
            if (scalar_sign(det) > 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("delaunay triangulation keeps the surface") {
    std::vector<PolygonSurface> cases{s1_surface(), regular_12gon(), unit_torus(),
                                      apply_matrix(s1_surface(), Mat2{q(13), q(8), q(8), q(5)})};
    for (auto tag : all_models()) cases.push_back(model_surface(tag, unit_params(tag)));
    for (const auto& s : cases) {
        auto t = delaunay_triangulation(s);
        CHECK(validate(t).ok());
        CHECK(stratum(t) == stratum(s));
        CHECK(area(t) == area(s));
        CHECK(locally_delaunay(t));
        for (int p = 0; p < t.polygon_count(); ++p) CHECK(t.edge_count(p) == 3);
        auto b = Budget::default_for(s);
        if (std::holds_alternative<Decomposition>(decompose(s, Direction::integer(1, 0), b)))
            CHECK(surfaces_isomorphic(s, t, Direction::integer(1, 0), b));
    }
}

TEST_CASE("skewed surfaces become short") {
    // a hyperbolic matrix stretches S1 along one eigendirection
    auto s = apply_matrix(s1_surface(), Mat2{q(13), q(8), q(8), q(5)});
    auto t = delaunay_triangulation(s);
    Scalar longest(0), before(0);
    for (const auto& poly : t.polygons())
        for (const auto& e : poly) longest = std::max(longest, norm2(e));
    for (const auto& poly : s.polygons())
        for (const auto& e : poly) before = std::max(before, norm2(e));
    CHECK(longest < before);
}

TEST_CASE("deformed surfaces decompose quickly in other directions") {
    std::mt19937_64 rng(8);
    auto params = random_params(ModelTag::TwoCyl_23, rng);
    auto m = model_surface(ModelTag::TwoCyl_23, params);
    auto dx = Direction::integer(36, 5);
    auto d = require_periodic(m, dx, Budget::default_for(m));
    int k = 0;
    while (!d.cylinders[k].simple()) ++k;
    auto m1 = cylinder_deform(m, dx, {{k, q(1, 2) * d.cylinders[k].width / d.cylinders[k].height}}, Budget::default_for(m));
    auto r = decompose(m1, Direction::integer(17, 5), Budget::default_for(m1));
    REQUIRE(std::holds_alternative<Decomposition>(r));
    std::size_t pieces = 0;
    for (const auto& sc : std::get<Decomposition>(r).saddles) pieces += sc.pieces.size();
    // 43178 pieces when the deformed rectangles were kept as they are
    CHECK(pieces < 4000);
}
