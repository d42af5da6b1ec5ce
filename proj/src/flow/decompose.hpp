#pragma once

#include "flow/tracer.hpp"

#include <variant>

namespace flatdeck {

// Length budget for tracing, stored squared so it never leaves the field.
struct Budget {
    Scalar length_sq;
    static Budget length(const Scalar& l) { return {l * l}; }
    // 1000 times the longest edge of the surface.
    static Budget default_for(const PolygonSurface& s);
};

// A cylinder of a periodic direction.  Width, height and twist are measured
// in the direction frame, where the direction is horizontal and the frame
// has determinant one; words list saddle ids left to right (in the +dir
// sense), each starting at its lowest id.
struct Cylinder {
    Scalar width, height, twist;
    std::vector<int> top, bottom;
    Vec2 core_holonomy;  // in original coordinates

    Scalar area() const { return width * height; }
    bool simple() const { return top.size() == 1 && bottom.size() == 1; }
};

struct Decomposition {
    Direction direction{Vec2{Scalar(1), Scalar(0)}};
    Mat2 frame;                              // sends direction to (1, 0)
    std::vector<SaddleConnection> saddles;   // pieces are in frame coordinates
    std::vector<Scalar> lengths;             // frame length of each saddle
    std::vector<Cylinder> cylinders;
    std::vector<int> above, below;           // cylinder whose bottom / top word holds each saddle
    std::vector<std::pair<int, int>> adjacency;

    Vec2 holonomy(int saddle) const { return saddles[saddle].holonomy; }
};

struct NotPeriodic {
    Direction direction;
    std::string reason;
};

struct Inconclusive {
    Direction direction;
    std::string reason;
    Scalar traced_length_sq;
};

using DecomposeResult = std::variant<Decomposition, NotPeriodic, Inconclusive>;

DecomposeResult decompose(const PolygonSurface& s, const Direction& dir, const Budget& budget);

// Twist of a cylinder if its words were rotated to start at the given
// positions instead of at their lowest ids.
Scalar twist_for_rotation(const Decomposition& d, int cyl, std::size_t bottom_start, std::size_t top_start);

struct ScanEntry {
    Direction direction;
    Decomposition decomposition;
};

struct ScanResult {
    std::vector<ScanEntry> periodic;
    std::vector<Direction> not_periodic;
    std::vector<Direction> inconclusive;
};

// Primitive integer directions (p, q) with |p|, |q| <= bound, normalized,
// in the deterministic Direction order.
std::vector<Direction> scan_directions(int bound);

ScanResult scan(const PolygonSurface& s, int bound, const Budget& budget, int jobs = 1);

}  // namespace flatdeck
