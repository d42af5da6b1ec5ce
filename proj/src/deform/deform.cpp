#include "deform/deform.hpp"

#include "surface/triangulate.hpp"

#include <algorithm>

namespace flatdeck {

NotCertified::NotCertified(const Direction& d, std::string reason, bool inconclusive)
    : std::runtime_error("direction " + d.to_string() + " is not certified periodic: " + reason),
      inconclusive_(inconclusive) {}

Decomposition require_periodic(const PolygonSurface& s, const Direction& dir, const Budget& budget) {
    auto r = decompose(s, dir, budget);
    if (auto* np = std::get_if<NotPeriodic>(&r)) throw NotCertified(dir, np->reason, false);
    if (auto* inc = std::get_if<Inconclusive>(&r)) throw NotCertified(dir, inc->reason, true);
    return std::get<Decomposition>(std::move(r));
}

PolygonSurface cylinder_deform(const PolygonSurface& s, const DeformationSpec& spec, const Budget& budget) {
    if (spec.cylinders.empty()) throw std::invalid_argument("no cylinders selected");
    std::vector<int> chosen = spec.cylinders;
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    std::vector<CylinderChange> changes;
    for (int i : chosen) changes.push_back({i, spec.shear, spec.stretch});
    return cylinder_deform(s, spec.direction, changes, budget);
}

PolygonSurface cylinder_deform(const PolygonSurface& s, const Direction& dir, const std::vector<CylinderChange>& changes,
                               const Budget& budget) {
    if (changes.empty()) throw std::invalid_argument("no cylinders selected");
    for (const auto& c : changes)
        if (scalar_sign(c.stretch) <= 0) throw std::invalid_argument("stretch factor must be positive");
    auto d = require_periodic(s, dir, budget);
    auto [diag, params] = raw_diagram(d);
    std::vector<bool> seen(d.cylinders.size(), false);
    for (const auto& c : changes) {
        if (c.index < 0 || c.index >= static_cast<int>(d.cylinders.size()))
            throw std::out_of_range("cylinder index " + std::to_string(c.index) + " out of range");
        if (seen[c.index]) throw std::invalid_argument("cylinder " + std::to_string(c.index) + " listed twice");
        seen[c.index] = true;
        params.twists[c.index] += c.shear * params.heights[c.index];
        params.heights[c.index] *= c.stretch;
    }
    // the rebuilt rectangles are long and thin in the deformation direction
    return delaunay_triangulation(apply_matrix(build_from_diagram(diag, params), d.frame.inverse()));
}

Scalar portion(const Homology& h, const Decomposition& dc, int c, const Decomposition& dd, const std::vector<int>& coll) {
    if (dc.direction == dd.direction) throw std::invalid_argument("portion needs two transverse directions");
    const auto& cyl = dc.cylinders.at(c);
    ClassVector alpha = core_class(h, dc, c);
    Scalar total(0);
    std::vector<int> chosen = coll;
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    for (int k : chosen) {
        const auto& other = dd.cylinders.at(k);
        long n = std::labs(h.intersection(alpha, core_class(h, dd, k)));
        if (n == 0) continue;
        // every crossing of the cores is a parallelogram of area
        // area(C) area(D) / |H_C x H_D|
        total += Scalar(n) * other.area() / abs(cross(cyl.core_holonomy, other.core_holonomy));
    }
    return total;
}

Scalar portion(const PolygonSurface& s, const Direction& dir, int c, const Direction& other,
               const std::vector<int>& coll, const Budget& budget) {
    auto dc = require_periodic(s, dir, budget);
    auto dd = require_periodic(s, other, budget);
    return portion(Homology(s), dc, c, dd, coll);
}

Scalar predicted_circumference(const Scalar& c1, const Scalar& p, const Scalar& t) {
    return (Scalar(1) - p + t * p) * c1;
}

SurfaceForm canonical_form(const PolygonSurface& s, const Direction& dir, const Budget& budget) {
    auto lab = diagram_of(require_periodic(s, dir, budget));
    return {lab.diagram, *lab.params};
}

bool surfaces_isomorphic(const PolygonSurface& a, const PolygonSurface& b, const Direction& dir, const Budget& budget) {
    return canonical_form(a, dir, budget) == canonical_form(b, dir, budget);
}

}  // namespace flatdeck
