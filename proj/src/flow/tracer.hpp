#pragma once

#include "surface/surface.hpp"

#include <functional>
#include <optional>
#include <variant>

namespace flatdeck {

// Straight segment of a trajectory inside one polygon, in that polygon's
// local coordinates.  A location on the boundary is either a vertex index
// or the interior of an edge.
struct TracePiece {
    int poly = 0;
    Vec2 from, to;
    int from_vertex = -1, from_edge = -1;
    int to_vertex = -1, to_edge = -1;
};

struct TraceHit {
    int vertex_class = -1;
    Corner arrival;  // corner at the endpoint containing the reversed direction
};

struct TraceResult {
    std::vector<TracePiece> pieces;
    Scalar parameter{0};  // total traced length in units of |dir|
    std::optional<TraceHit> hit;  // empty when stopped by budget or predicate
    bool stopped_by_predicate = false;
};

// Called for each piece before it is accepted.  Returning a parameter
// s in (0, 1] cuts the piece at from + s*(to - from) and ends the trace.
using PieceCut = std::function<std::optional<Scalar>(const TracePiece&)>;

// Follows the straight line leaving the vertex of `start` in direction `dir`
// (which must lie in the corner's sector) until it reaches a singular vertex,
// the squared holonomy length exceeds `budget_sq`, or `cut` fires.  Order-0
// points that are not singular are crossed straight through.  A trajectory
// running along an edge is assigned to the polygon on its left.
TraceResult trace_from_corner(const SurfaceTopology& topo, Corner start, const Vec2& dir, const Scalar& budget_sq,
                              const PieceCut& cut = {});

// First corner of a vertex class, walking counterclockwise from `from`,
// whose sector contains `dir`.
Corner corner_with(const SurfaceTopology& topo, Corner from, const Vec2& dir);

// Outgoing separatrix from a singular vertex.
struct Separatrix {
    int vertex_class = -1;
    Corner corner;
};

std::vector<Separatrix> outgoing_separatrices(const SurfaceTopology& topo, const Vec2& dir);

struct SaddleConnection {
    int id = 0;
    Vec2 holonomy;             // in the coordinates of the traced surface
    Separatrix start;
    TraceHit end;
    std::vector<TracePiece> pieces;
    std::vector<long> chain;   // relative cycle, coefficient per glued edge class
};

struct TraceInconclusive {
    Separatrix start;
    Scalar length_sq;  // squared length traced before the budget ran out
};

// `budget_sq` is the squared length allowed, measured in the traced surface.
std::variant<SaddleConnection, TraceInconclusive> trace_separatrix(const SurfaceTopology& topo, const Separatrix& sep,
                                                                   const Vec2& dir, const Scalar& budget_sq);

// Relative cycle (edge-class coefficients) homotopic rel endpoints to a
// chain of pieces running from a vertex to a vertex.
std::vector<long> chain_of_pieces(const SurfaceTopology& topo, const std::vector<TracePiece>& pieces);

}  // namespace flatdeck
