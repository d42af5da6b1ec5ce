#pragma once

#include "surface/surface.hpp"

namespace flatdeck {

// Same surface cut into triangles by ear clipping, then edge-flipped until
// Delaunay.  Used after deformations, whose polygons can be long and thin in
// the deformation direction; traces in other directions then cross far
// fewer polygons.  The vertex set is unchanged.
PolygonSurface delaunay_triangulation(const PolygonSurface& s);

}  // namespace flatdeck
