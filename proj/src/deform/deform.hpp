#pragma once

#include "diagram/diagram.hpp"
#include "homology/homology.hpp"

namespace flatdeck {

// Raised when an operation needs a certified periodic direction and the
// decomposition came back NotPeriodic or Inconclusive.
class NotCertified : public std::runtime_error {
public:
    NotCertified(const Direction& d, std::string reason, bool inconclusive);
    bool inconclusive() const { return inconclusive_; }

private:
    bool inconclusive_;
};

Decomposition require_periodic(const PolygonSurface& s, const Direction& dir, const Budget& budget);

struct DeformationSpec {
    Direction direction{Vec2{Scalar(1), Scalar(0)}};
    std::vector<int> cylinders;  // indices into the decomposition
    Scalar shear{0};
    Scalar stretch{1};
};

// Shears the selected cylinders by t and stretches their heights by sigma
// in the direction frame, then rebuilds the surface.
PolygonSurface cylinder_deform(const PolygonSurface& s, const DeformationSpec& spec, const Budget& budget);

// Per-cylinder variant: each listed cylinder gets its own shear and stretch.
struct CylinderChange {
    int index;
    Scalar shear{0};
    Scalar stretch{1};
};
PolygonSurface cylinder_deform(const PolygonSurface& s, const Direction& dir, const std::vector<CylinderChange>& changes,
                               const Budget& budget);

// Area fraction of cylinder `c` of `dc` covered by the listed cylinders of
// the transverse decomposition `dd`.
Scalar portion(const Homology& h, const Decomposition& dc, int c, const Decomposition& dd, const std::vector<int>& coll);
Scalar portion(const PolygonSurface& s, const Direction& dir, int c, const Direction& other,
               const std::vector<int>& coll, const Budget& budget);

// (1 - P + tP) c1
Scalar predicted_circumference(const Scalar& c1, const Scalar& p, const Scalar& t);

// Canonical form of a surface through its decomposition in `dir`: the
// canonical diagram plus normalized lengths, heights and twists.
struct SurfaceForm {
    CylinderDiagram diagram;
    DiagramParams params;
    bool operator==(const SurfaceForm& o) const {
        return diagram == o.diagram && params.lengths == o.params.lengths && params.heights == o.params.heights &&
               params.twists == o.params.twists;
    }
};

SurfaceForm canonical_form(const PolygonSurface& s, const Direction& dir, const Budget& budget);
bool surfaces_isomorphic(const PolygonSurface& a, const PolygonSurface& b, const Direction& dir, const Budget& budget);

}  // namespace flatdeck
