#pragma once

#include "surface/surface.hpp"

#include <string>

namespace flatdeck {

// Malformed surface document (not JSON, wrong version, bad scalar).
class SurfaceFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kSurfaceFormat = "flatdeck-surface/1";

// "flatdeck-surface/1" document.  Scalars are written as "p/q" strings when
// rational and as {"a": "p/q", "b": "r/s"} for a + b sqrt(d).
std::string surface_to_json(const PolygonSurface& s);
PolygonSurface surface_from_json(const std::string& text);

PolygonSurface read_surface_file(const std::string& path);
void write_surface_file(const PolygonSurface& s, const std::string& path);

}  // namespace flatdeck
