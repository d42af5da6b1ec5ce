#pragma once

#include "surface/surface.hpp"

namespace flatdeck {

// Unit square with opposite sides glued.
PolygonSurface unit_torus();

// Five unit squares in a horizontal row; the top of square i is glued to
// the bottom of square 4 - i (one horizontal cylinder, H(4)).
PolygonSurface s1_surface();

// Regular 12-gon of side 1 over Q(sqrt 3), opposite sides glued.
PolygonSurface regular_12gon();

}  // namespace flatdeck
