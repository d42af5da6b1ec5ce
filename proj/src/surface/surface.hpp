#pragma once

#include "exact/linear.hpp"

#include <string>
#include <vector>

namespace flatdeck {

// Directed edge `edge` of polygon `poly` (0-based, polygon cyclic order).
struct EdgeRef {
    int poly = 0;
    int edge = 0;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// Corner of a polygon: the vertex where edge `edge` starts.
using Corner = EdgeRef;

// Convex polygons with edges glued in pairs by translation.
// 
// This is a plain value: construction performs only shape checks, the full
// invariants are checked by validate().  Operations that need a valid
// surface call require_valid() first.
class PolygonSurface {
public:
    PolygonSurface() = default;
    PolygonSurface(long field_d, std::vector<std::vector<Vec2>> polygons, std::vector<std::pair<EdgeRef, EdgeRef>> gluings);

    long field() const { return d_; }
    int polygon_count() const { return static_cast<int>(polygons_.size()); }
    int edge_count(int p) const { return static_cast<int>(polygons_[p].size()); }
    const std::vector<Vec2>& polygon(int p) const { return polygons_[p]; }
    const Vec2& edge_vector(EdgeRef e) const { return polygons_[e.poly][e.edge]; }
    const std::vector<std::vector<Vec2>>& polygons() const { return polygons_; }
    const std::vector<std::pair<EdgeRef, EdgeRef>>& gluings() const { return gluings_; }

    // Partner edge; only meaningful on surfaces whose gluing is a perfect matching.
    EdgeRef partner(EdgeRef e) const { return partner_[e.poly][e.edge]; }
    bool has_partner(EdgeRef e) const { return partner_[e.poly][e.edge].poly >= 0; }

    int next_edge(int p, int i) const { return (i + 1) % edge_count(p); }
    int prev_edge(int p, int i) const { return (i + edge_count(p) - 1) % edge_count(p); }

    // Vertex positions in the polygon's local frame (vertex 0 at the origin).
    std::vector<Vec2> vertices(int p) const;

    void require_valid() const;

private:
    long d_ = 1;
    std::vector<std::vector<Vec2>> polygons_;
    std::vector<std::pair<EdgeRef, EdgeRef>> gluings_;
    std::vector<std::vector<EdgeRef>> partner_;
};

struct Violation {
    std::string kind;  // short stable identifier, e.g. "non-translation gluing"
    int polygon = -1;
    int edge = -1;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const PolygonSurface& s);

class InvalidSurface : public std::invalid_argument {
public:
    explicit InvalidSurface(const ValidationReport& r);
};

// Orbit of corners around one point of the surface, listed counterclockwise.
struct VertexClass {
    std::vector<Corner> fan;
    int order = 0;  // cone angle is 2*pi*(order + 1)
};

// Combinatorial data derived once from a valid surface.
class SurfaceTopology {
public:
    explicit SurfaceTopology(const PolygonSurface& s);

    const PolygonSurface& surface() const { return surface_; }
    const std::vector<VertexClass>& classes() const { return classes_; }
    int class_of(Corner c) const { return corner_class_[c.poly][c.edge]; }
    int fan_index(Corner c) const { return fan_pos_[c.poly][c.edge]; }
    // Next corner counterclockwise around the same point.
    Corner ccw_next(Corner c) const;

    // Sector of a corner: [outgoing edge direction, reversed incoming edge).
    Vec2 sector_start(Corner c) const;
    Vec2 sector_end(Corner c) const;
    bool corner_contains(Corner c, const Vec2& dir) const;

    // Points where flow lines stop: the zeros, or every vertex class when
    // the surface has no zero at all (a flat torus with marked points).
    bool is_singular(int cls) const { return singular_[cls]; }

    const std::vector<Vec2>& vertex_positions(int p) const { return positions_[p]; }

    // Glued edge pairs, each oriented as its first occurrence in (poly, edge) order.
    int glued_edge_count() const { return static_cast<int>(edge_classes_.size()); }
    EdgeRef edge_representative(int id) const { return edge_classes_[id]; }
    int edge_class(EdgeRef e) const { return edge_id_[e.poly][e.edge]; }
    int edge_sign(EdgeRef e) const { return edge_sign_[e.poly][e.edge]; }

    int euler_characteristic() const;

private:
    PolygonSurface surface_;
    std::vector<VertexClass> classes_;
    std::vector<std::vector<int>> corner_class_;
    std::vector<std::vector<int>> fan_pos_;
    std::vector<bool> singular_;
    std::vector<std::vector<Vec2>> positions_;
    std::vector<EdgeRef> edge_classes_;
    std::vector<std::vector<int>> edge_id_;
    std::vector<std::vector<int>> edge_sign_;
};

struct StratumSignature {
    std::vector<int> zero_orders;  // orders k_i > 0, sorted descending
    int marked_points = 0;         // vertex classes of order 0
    int genus = 0;
    std::string to_string() const;  // e.g. "H(4)"
    friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
};

// Raised when the two genus computations disagree.
class CorruptComplex : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

StratumSignature stratum(const PolygonSurface& s);
Scalar area(const PolygonSurface& s);
Scalar polygon_area(const std::vector<Vec2>& edges);
PolygonSurface apply_matrix(const PolygonSurface& s, const Mat2& m);

}  // namespace flatdeck
