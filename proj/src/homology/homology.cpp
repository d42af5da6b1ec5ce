#include "homology/homology.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace flatdeck {

Homology::Homology(const PolygonSurface& s) : topo_(s) {
    const int np = s.polygon_count();
    const int ne = topo_.glued_edge_count();
    const int nv = static_cast<int>(topo_.classes().size());

    face_boundary_.assign(np, std::vector<long>(ne, 0));
    for (int p = 0; p < np; ++p)
        for (int i = 0; i < s.edge_count(p); ++i) face_boundary_[p][topo_.edge_class({p, i})] += topo_.edge_sign({p, i});
    for (int e = 0; e < ne; ++e) {
        EdgeRef r = topo_.edge_representative(e);
        edge_ends_.push_back({topo_.class_of(r), topo_.class_of({r.poly, s.next_edge(r.poly, r.edge)})});
    }

    // dual spanning tree over faces
    std::vector<char> in_tree_edge(ne, 0), seen(np, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (int i = 0; i < s.edge_count(p); ++i) {
            int q = s.partner({p, i}).poly;
            if (seen[q]) continue;
            seen[q] = 1;
            int e = topo_.edge_class({p, i});
            in_tree_edge[e] = 1;
            tree_.push_back({q, e});
            queue.push_back(q);
        }
    }
    basis_index_.assign(ne, -1);
    for (int e = 0; e < ne; ++e) {
        if (in_tree_edge[e]) continue;
        basis_index_[e] = static_cast<int>(basis_edges_.size());
        basis_edges_.push_back(e);
    }

    // rotation system: half-edges around each vertex, counterclockwise
    std::vector<std::vector<std::pair<int, int>>> rot(nv);
    for (int v = 0; v < nv; ++v)
        for (const auto& c : topo_.classes()[v].fan) rot[v].push_back({topo_.edge_class(c), topo_.edge_sign(c)});
    // contract a spanning tree of the vertex graph into a single vertex
    std::vector<char> vseen(nv, 0), vtree(ne, 0);
    std::vector<std::pair<int, int>> merged = rot[0];
    std::deque<int> vq{0};
    vseen[0] = 1;
    while (!vq.empty()) {
        int u = vq.front();
        vq.pop_front();
        for (int e = 0; e < ne; ++e) {
            auto [a, b] = edge_ends_[e];
            if (a == b || (a != u && b != u)) continue;
            int v = a == u ? b : a;
            if (vseen[v]) continue;
            vseen[v] = 1;
            vtree[e] = 1;
            vq.push_back(v);
            std::pair<int, int> at_u{e, a == u ? 1 : -1};
            std::pair<int, int> at_v{e, -at_u.second};
            auto& rv = rot[v];
            auto it = std::find(rv.begin(), rv.end(), at_v);
            std::vector<std::pair<int, int>> seq(it + 1, rv.end());
            seq.insert(seq.end(), rv.begin(), it);
            auto where = std::find(merged.begin(), merged.end(), at_u);
            where = merged.erase(where);
            merged.insert(where, seq.begin(), seq.end());
        }
    }
    std::map<std::pair<int, int>, int> pos;
    for (std::size_t k = 0; k < merged.size(); ++k) pos[merged[k]] = static_cast<int>(k);
    const int len = static_cast<int>(merged.size());
    for (int e = 0; e < ne; ++e)
        if (!vtree[e]) loop_edges_.push_back(e);
    pairing_.assign(ne, std::vector<int>(ne, 0));
    for (int e : loop_edges_) {
        for (int f : loop_edges_) {
            if (e == f) continue;
            int a = pos.at({e, 1});
            auto rel = [&](int x) { return ((x - a) % len + len) % len; };
            int b = rel(pos.at({e, -1}));
            bool fp = rel(pos.at({f, 1})) < b, fm = rel(pos.at({f, -1})) < b;
            if (fp && !fm) pairing_[e][f] = 1;
            if (fm && !fp) pairing_[e][f] = -1;
        }
    }
}

std::vector<long> Homology::face_boundary(int p) const { return face_boundary_[p]; }

ClassVector Homology::reduce(std::vector<long> chain) const {
    if (static_cast<int>(chain.size()) != topo_.glued_edge_count())
        throw std::invalid_argument("chain has the wrong length");
    for (const auto& [f, e] : tree_) {
        long c = chain[e];
        if (c == 0) continue;
        long s = face_boundary_[f][e];
        for (std::size_t k = 0; k < chain.size(); ++k) chain[k] -= c * s * face_boundary_[f][k];
    }
    ClassVector out;
    for (int e : basis_edges_) out.push_back(chain[e]);
    return out;
}

std::vector<long> Homology::chain_of(const ClassVector& c) const {
    if (static_cast<int>(c.size()) != rank()) throw std::invalid_argument("class has the wrong rank");
    std::vector<long> chain(topo_.glued_edge_count(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) chain[basis_edges_[k]] = c[k];
    return chain;
}

std::vector<Vec2> Homology::periods() const {
    std::vector<Vec2> out;
    for (int e : basis_edges_) out.push_back(topo_.surface().edge_vector(topo_.edge_representative(e)));
    return out;
}

Vec2 Homology::holonomy(const ClassVector& c) const {
    auto per = periods();
    Vec2 h{Scalar(0), Scalar(0)};
    for (std::size_t k = 0; k < c.size(); ++k) h += Scalar(c[k]) * per[k];
    return h;
}

std::vector<long> Homology::boundary(const ClassVector& c) const {
    auto chain = chain_of(c);
    std::vector<long> b(topo_.classes().size(), 0);
    for (std::size_t e = 0; e < chain.size(); ++e) {
        b[edge_ends_[e].second] += chain[e];
        b[edge_ends_[e].first] -= chain[e];
    }
    return b;
}

bool Homology::is_absolute(const ClassVector& c) const {
    auto b = boundary(c);
    return std::all_of(b.begin(), b.end(), [](long x) { return x == 0; });
}

long Homology::intersection(const ClassVector& a, const ClassVector& b) const {
    if (!is_absolute(a) || !is_absolute(b)) throw std::invalid_argument("intersection needs absolute classes");
    auto ca = chain_of(a), cb = chain_of(b);
    long total = 0;
    for (int e : loop_edges_) {
        if (ca[e] == 0) continue;
        for (int f : loop_edges_) total += ca[e] * cb[f] * pairing_[e][f];
    }
    return total;
}

ClassVector saddle_class(const Homology& h, const Decomposition& d, int saddle) {
    return h.reduce(d.saddles.at(saddle).chain);
}

ClassVector core_class(const Homology& h, const Decomposition& d, int cylinder) {
    std::vector<long> chain(h.topology().glued_edge_count(), 0);
    for (int x : d.cylinders.at(cylinder).top)
        for (std::size_t k = 0; k < chain.size(); ++k) chain[k] += d.saddles[x].chain[k];
    return h.reduce(chain);
}

int span_rank(const std::vector<ClassVector>& classes) {
    if (classes.empty()) return 0;
    std::vector<std::vector<Rational>> m;
    for (const auto& c : classes) {
        std::vector<Rational> row;
        for (long x : c) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    const std::size_t cols = m[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (std::size_t k = col; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

bool isotropic(const Homology& h, const std::vector<ClassVector>& classes) {
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (h.intersection(classes[i], classes[j]) != 0) return false;
    return true;
}

bool stratum_parallel(const Homology& h, const Decomposition& d, int i, int j) {
    if (i == j) throw std::invalid_argument("stratum_parallel needs two distinct cylinders");
    return core_class(h, d, i) == core_class(h, d, j);
}

}  // namespace flatdeck
