#include "surface/triangulate.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace flatdeck {

namespace {

struct Tri {
    Vec2 e[3];      // ccw edge vectors, summing to zero
    EdgeRef nb[3];  // partner (triangle, edge)
};

bool in_closed_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    return scalar_sign(cross(b - a, p - a)) >= 0 && scalar_sign(cross(c - b, p - b)) >= 0 &&
           scalar_sign(cross(a - c, p - c)) >= 0;
}

// Where an edge of a partly clipped polygon came from.
struct Source {
    bool original;
    EdgeRef edge;  // original edge, or (diagonal id, side)
};

std::vector<Tri> ear_clip(const PolygonSurface& s) {
    std::vector<Tri> tris;
    std::vector<std::pair<EdgeRef, EdgeRef>> diag_ends;  // per diagonal: the two triangle edges
    std::map<EdgeRef, EdgeRef> original_slot;            // original edge -> triangle edge
    for (int p = 0; p < s.polygon_count(); ++p) {
        auto v = s.vertices(p);
        std::vector<int> ring(v.size());
        std::vector<Source> src(v.size());  // src[k]: edge leaving ring[k]
        for (std::size_t k = 0; k < v.size(); ++k) {
            ring[k] = static_cast<int>(k);
            src[k] = {true, {p, static_cast<int>(k)}};
        }
        auto place = [&](const Source& so, EdgeRef slot) {
            if (so.original) original_slot[so.edge] = slot;
            else (so.edge.edge == 0 ? diag_ends[so.edge.poly].first : diag_ends[so.edge.poly].second) = slot;
        };
        while (ring.size() > 3) {
            std::size_t n = ring.size(), k = 0;
            for (; k < n; ++k) {
                const Vec2 &a = v[ring[(k + n - 1) % n]], &b = v[ring[k]], &c = v[ring[(k + 1) % n]];
                if (scalar_sign(cross(b - a, c - b)) <= 0) continue;
                bool ear = true;
                for (std::size_t j = 0; j < n && ear; ++j) {
                    if (j == k || j == (k + 1) % n || j == (k + n - 1) % n) continue;
                    if (in_closed_triangle(v[ring[j]], a, b, c)) ear = false;
                }
                if (ear) break;
            }
            if (k == n) throw std::logic_error("polygon has no ear");
            std::size_t prev = (k + n - 1) % n;
            int id = static_cast<int>(diag_ends.size());
            diag_ends.push_back({});
            int t = static_cast<int>(tris.size());
            const Vec2 &a = v[ring[prev]], &b = v[ring[k]], &c = v[ring[(k + 1) % n]];
            tris.push_back({{b - a, c - b, a - c}, {}});
            place(src[prev], {t, 0});
            place(src[k], {t, 1});
            place({false, {id, 0}}, {t, 2});
            src[prev] = {false, {id, 1}};
            ring.erase(ring.begin() + static_cast<long>(k));
            src.erase(src.begin() + static_cast<long>(k));
        }
        int t = static_cast<int>(tris.size());
        tris.push_back({{v[ring[1]] - v[ring[0]], v[ring[2]] - v[ring[1]], v[ring[0]] - v[ring[2]]}, {}});
        for (int i = 0; i < 3; ++i) place(src[i], {t, i});
    }
    auto link = [&](EdgeRef a, EdgeRef b) {
        tris[a.poly].nb[a.edge] = b;
        tris[b.poly].nb[b.edge] = a;
    };
    for (const auto& [x, y] : diag_ends) link(x, y);
    for (const auto& [a, b] : s.gluings()) link(original_slot.at(a), original_slot.at(b));
    return tris;
}

// Opposite vertex of the neighbour lies strictly inside the circumcircle.
bool needs_flip(const std::vector<Tri>& tris, int t, int i) {
    EdgeRef o = tris[t].nb[i];
    if (o.poly == t) return false;
    const Tri& a = tris[t];
    const Tri& b = tris[o.poly];
    // P = origin at the start of edge i, Q = P + e_i, R = Q + e_{i+1}; S = P + c
    Vec2 q = a.e[i], r = a.e[i] + a.e[(i + 1) % 3], sp = b.e[(o.edge + 1) % 3];
    Vec2 pa = Vec2{Scalar(0), Scalar(0)} - sp, qa = q - sp, ra = r - sp;
    Scalar det = pa.x * (qa.y * norm2(ra) - norm2(qa) * ra.y) - pa.y * (qa.x * norm2(ra) - norm2(qa) * ra.x) +
                 norm2(pa) * (qa.x * ra.y - qa.y * ra.x);
    return scalar_sign(det) > 0;
}

void flip(std::vector<Tri>& tris, int t, int i) {
    EdgeRef o = tris[t].nb[i];
    int u = o.poly, j = o.edge;
    Tri old_t = tris[t], old_u = tris[u];
    Vec2 a = old_t.e[(i + 1) % 3], b = old_t.e[(i + 2) % 3];
    Vec2 c = old_u.e[(j + 1) % 3], d = old_u.e[(j + 2) % 3];
    // new slots of the four outer edges
    auto moved = [&](EdgeRef e) -> EdgeRef {
        if (e == EdgeRef{t, (i + 1) % 3}) return {t, 1};  // a
        if (e == EdgeRef{t, (i + 2) % 3}) return {u, 0};  // b
        if (e == EdgeRef{u, (j + 1) % 3}) return {u, 1};  // c
        if (e == EdgeRef{u, (j + 2) % 3}) return {t, 0};  // d
        return e;
    };
    EdgeRef na = moved(old_t.nb[(i + 1) % 3]), nb = moved(old_t.nb[(i + 2) % 3]);
    EdgeRef nc = moved(old_u.nb[(j + 1) % 3]), nd = moved(old_u.nb[(j + 2) % 3]);
    tris[t] = {{d, a, Vec2{Scalar(0), Scalar(0)} - (d + a)}, {nd, na, {u, 2}}};
    tris[u] = {{b, c, d + a}, {nb, nc, {t, 2}}};
    for (auto [slot, other] : {std::pair{EdgeRef{t, 0}, nd}, {EdgeRef{t, 1}, na}, {EdgeRef{u, 0}, nb}, {EdgeRef{u, 1}, nc}})
        tris[other.poly].nb[other.edge] = slot;
}

}  // namespace

PolygonSurface delaunay_triangulation(const PolygonSurface& s) {
    auto tris = ear_clip(s);
    std::deque<EdgeRef> work;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
        for (int i = 0; i < 3; ++i) work.push_back({t, i});
    while (!work.empty()) {
        EdgeRef e = work.front();
        work.pop_front();
        if (!needs_flip(tris, e.poly, e.edge)) continue;
        int u = tris[e.poly].nb[e.edge].poly;
        flip(tris, e.poly, e.edge);
        for (int k = 0; k < 2; ++k) {
            work.push_back({e.poly, k});
            work.push_back({u, k});
        }
    }
    std::vector<std::vector<Vec2>> polys;
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        polys.push_back({tris[t].e[0], tris[t].e[1], tris[t].e[2]});
        for (int i = 0; i < 3; ++i) {
            EdgeRef me{t, i}, other = tris[t].nb[i];
            if (me < other) glue.push_back({me, other});
        }
    }
    return PolygonSurface(s.field(), std::move(polys), std::move(glue));
}

}  // namespace flatdeck
