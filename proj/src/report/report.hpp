#pragma once

#include "deform/deform.hpp"

#include <json.hpp>

namespace flatdeck {

// Reports keep their fields in insertion order so output is stable.
using Json = nlohmann::ordered_json;

// Exact text of a scalar: "p/q" or "p/q+r/s√d".
std::string scalar_text(const Scalar& x);
Json vec_json(const Vec2& v);

Json validation_report(const ValidationReport& r);
Json info_report(const PolygonSurface& s);

// Cylinders are numbered from 1 in decomposition order; saddle connections
// from 1 by id, with their letter in the canonical diagram.
Json decomposition_report(const Decomposition& d);
// "status" is "periodic", "not_periodic" or "inconclusive".
Json decompose_report(const DecomposeResult& r);
Json classify_report(const DecomposeResult& r);
Json scan_report(const ScanResult& r, int bound);
Json homology_report(const PolygonSurface& s);

// Cylinder rectangles of a decomposition in its direction frame, with the
// saddle connections labelled by canonical letters.  SVG 1.1.
std::string render_svg(const Decomposition& d);

}  // namespace flatdeck
