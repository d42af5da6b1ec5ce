#include "corpus/basic.hpp"

namespace flatdeck {

namespace {

std::vector<Vec2> unit_square() {
    return {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(-1), Scalar(0)}, {Scalar(0), Scalar(-1)}};
}

}  // namespace

PolygonSurface unit_torus() { return PolygonSurface(1, {unit_square()}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}}); }

PolygonSurface s1_surface() {
    std::vector<std::vector<Vec2>> polys(5, unit_square());
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (int i = 0; i < 5; ++i) glue.push_back({{i, 1}, {(i + 1) % 5, 3}});
    for (int i = 0; i < 5; ++i) glue.push_back({{i, 2}, {4 - i, 0}});
    return PolygonSurface(1, std::move(polys), std::move(glue));
}

PolygonSurface regular_12gon() {
    const Scalar half = Rational(1, 2);
    const Scalar r3h(Rational(0), Rational(1, 2), 3);  // sqrt(3)/2
    // (cos, sin) of 30k degrees for k = 0..2; the rest follow by rotation
    const std::vector<Vec2> first = {{Scalar(1), Scalar(0)}, {r3h, half}, {half, r3h}};
    std::vector<Vec2> edges;
    for (int quarter = 0; quarter < 4; ++quarter) {
        for (const auto& v : first) {
            Vec2 w = v;
            for (int r = 0; r < quarter; ++r) w = {-w.y, w.x};
            edges.push_back(w);
        }
    }
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (int k = 0; k < 6; ++k) glue.push_back({{0, k}, {0, k + 6}});
    return PolygonSurface(3, {edges}, std::move(glue));
}

}  // namespace flatdeck
