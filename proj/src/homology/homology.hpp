#pragma once

#include "flow/decompose.hpp"

namespace flatdeck {

// Integer coordinates of a class in H_1(M, Sigma; Z), Sigma = all vertices.
using ClassVector = std::vector<long>;

// Cellular chain complex of a surface relative to its vertices, with a basis
// of H_1(M, Sigma; Z) given by the glued edges outside a dual spanning tree.
class Homology {
public:
    explicit Homology(const PolygonSurface& s);

    const SurfaceTopology& topology() const { return topo_; }
    int rank() const { return static_cast<int>(basis_edges_.size()); }
    // Edge classes forming the basis, in order.
    const std::vector<int>& basis_edges() const { return basis_edges_; }
    // Coefficients of the boundary of polygon p on the edge classes.
    std::vector<long> face_boundary(int p) const;

    // Class of a relative cycle written on edge classes.
    ClassVector reduce(std::vector<long> chain) const;
    // Representative chain of a class (supported on basis edges).
    std::vector<long> chain_of(const ClassVector& c) const;

    std::vector<Vec2> periods() const;
    Vec2 holonomy(const ClassVector& c) const;

    // Boundary in Z^{vertex classes}; zero exactly for absolute classes.
    std::vector<long> boundary(const ClassVector& c) const;
    bool is_absolute(const ClassVector& c) const;

    // Algebraic intersection number of absolute classes; throws for
    // relative ones.
    long intersection(const ClassVector& a, const ClassVector& b) const;

private:
    SurfaceTopology topo_;
    std::vector<int> basis_edges_;
    std::vector<int> basis_index_;            // edge class -> basis slot or -1
    std::vector<std::pair<int, int>> tree_;   // (face, parent edge class) in BFS order
    std::vector<std::vector<long>> face_boundary_;
    std::vector<std::pair<int, int>> edge_ends_;  // vertex classes of start, end
    std::vector<int> loop_edges_;                 // edges left after contracting a vertex tree
    std::vector<std::vector<int>> pairing_;       // intersection of loop edges, indexed by edge class
};

// Absolute class of a cylinder's core: the sum of its top saddle connections.
ClassVector core_class(const Homology& h, const Decomposition& d, int cylinder);
ClassVector saddle_class(const Homology& h, const Decomposition& d, int saddle);

// Rank of the span, by exact elimination over Q.
int span_rank(const std::vector<ClassVector>& classes);
bool isotropic(const Homology& h, const std::vector<ClassVector>& classes);

// Stratum-level parallelism: the cores are homologous.  i == j is an error.
bool stratum_parallel(const Homology& h, const Decomposition& d, int i, int j);

}  // namespace flatdeck
