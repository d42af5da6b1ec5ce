#include <doctest.h>

#include "corpus/basic.hpp"

using namespace flatdeck;

namespace {

Scalar q(long p, long r = 1) { return Scalar(Rational(p, r)); }

bool has_kind(const ValidationReport& r, const std::string& kind) {
    for (const auto& v : r.violations)
        if (v.kind == kind) return true;
    return false;
}

}  // namespace

TEST_CASE("validate") {
    CHECK(validate(unit_torus()).ok());
    CHECK(validate(s1_surface()).ok());
    CHECK(validate(regular_12gon()).ok());

    // unequal vectors on a glued pair
    PolygonSurface bad(1, {{{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(0)}, {q(0), q(-1)}}},
                       {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}});
    auto rep = validate(bad);
    CHECK(!rep.ok());
    CHECK(has_kind(rep, "non-translation gluing"));
    CHECK(rep.violations.front().polygon == 0);

    // clockwise square
    PolygonSurface cw(1, {{{q(0), q(1)}, {q(1), q(0)}, {q(0), q(-1)}, {q(-1), q(0)}}},
                      {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}});
    CHECK(has_kind(validate(cw), "non-convex polygon"));

    PolygonSurface open(1, {{{q(1), q(0)}, {q(0), q(1)}, {q(-1), q(0)}}}, {});
    auto r2 = validate(open);
    CHECK(has_kind(r2, "open polygon"));
    CHECK(has_kind(r2, "unglued edge"));

    PolygonSurface two(1, {unit_torus().polygon(0), unit_torus().polygon(0)},
                       {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}, {{1, 0}, {1, 2}}, {{1, 1}, {1, 3}}});
    CHECK(has_kind(validate(two), "disconnected"));

    PolygonSurface dangling(1, {unit_torus().polygon(0)}, {{{0, 0}, {0, 7}}, {{0, 1}, {0, 3}}});
    CHECK(has_kind(validate(dangling), "bad edge reference"));

    // idempotent
    CHECK(validate(bad).violations.size() == rep.violations.size());
}

TEST_CASE("stratum") {
    auto t = stratum(unit_torus());
    CHECK(t.zero_orders.empty());
    CHECK(t.marked_points == 1);
    CHECK(t.genus == 1);

    auto s = stratum(s1_surface());
    CHECK(s.zero_orders == std::vector<int>{4});
    CHECK(s.genus == 3);
    CHECK(s.to_string() == "H(4)");
    SurfaceTopology topo(s1_surface());
    CHECK(topo.classes().size() == 1);
    CHECK(topo.euler_characteristic() == -4);

    auto g = stratum(regular_12gon());
    CHECK(g.zero_orders == std::vector<int>{4});
    CHECK(g.genus == 3);

    Mat2 m{q(1), q(1), q(0), q(1)};
    CHECK(stratum(apply_matrix(s1_surface(), m)) == s);
    CHECK(stratum(apply_matrix(s1_surface(), diag_matrix(q(1), q(2)))) == s);
}

TEST_CASE("area") {
    CHECK(area(unit_torus()) == q(1));
    CHECK(area(s1_surface()) == q(5));
    CHECK(area(apply_matrix(s1_surface(), diag_matrix(q(1), q(2)))) == q(10));
    // side-one regular 12-gon
    CHECK(area(regular_12gon()) == Scalar(Rational(6), Rational(3), 3));
    Mat2 m{q(2), q(1), q(1), q(3)};
    CHECK(area(apply_matrix(s1_surface(), m)) == m.det() * q(5));
    CHECK_THROWS(apply_matrix(s1_surface(), Mat2{q(0), q(1), q(1), q(0)}));
}
