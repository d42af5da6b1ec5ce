#include "flow/tracer.hpp"

#include <stdexcept>

namespace flatdeck {

Corner corner_with(const SurfaceTopology& topo, Corner from, const Vec2& dir) {
    const auto& fan = topo.classes()[topo.class_of(from)].fan;
    Corner c = from;
    for (std::size_t k = 0; k < fan.size(); ++k) {
        if (topo.corner_contains(c, dir)) return c;
        c = topo.ccw_next(c);
    }
    throw std::logic_error("no corner contains direction " + dir.to_string());
}

TraceResult trace_from_corner(const SurfaceTopology& topo, Corner start, const Vec2& dir, const Scalar& budget_sq,
                              const PieceCut& cut) {
    if (!topo.corner_contains(start, dir)) throw std::invalid_argument("direction outside the starting corner");
    const auto& s = topo.surface();
    const Scalar dn = norm2(dir);
    TraceResult res;
    int p = start.poly;
    Vec2 at = topo.vertex_positions(p)[start.edge];
    int at_vertex = start.edge, at_edge = -1;
    for (;;) {
        const auto& poly = s.polygon(p);
        const auto& verts = topo.vertex_positions(p);
        int n = static_cast<int>(poly.size());
        int exit = -1;
        Scalar best;
        for (int j = 0; j < n; ++j) {
            Scalar c = cross(poly[j], dir);
            if (scalar_sign(c) >= 0) continue;
            Scalar t = cross(poly[j], verts[j] - at) / c;
            if (exit < 0 || t < best) {
                exit = j;
                best = t;
            }
        }
        if (exit < 0 || scalar_sign(best) <= 0) throw std::logic_error("trace failed to leave polygon");
        // collinear edges tie on t; keep the one whose segment holds the hit
        {
            Vec2 hit = at + best * dir;
            for (int j = 0; j < n; ++j) {
                if (scalar_sign(cross(poly[j], dir)) >= 0) continue;
                Vec2 rel = hit - verts[j];
                if (!cross(poly[j], rel).is_zero()) continue;
                Scalar u = dot(rel, poly[j]) / norm2(poly[j]);
                if (scalar_sign(u) >= 0 && u <= Scalar(1)) {
                    exit = j;
                    break;
                }
            }
        }
        // a segment running along collinear edges meets their shared vertices first
        int through = -1;
        for (int k = 0; k < n; ++k) {
            Vec2 r = verts[k] - at;
            if (!cross(r, dir).is_zero()) continue;
            Scalar t = dot(r, dir) / dn;
            if (scalar_sign(t) > 0 && t < best) {
                best = t;
                through = k;
            }
        }
        Vec2 x = at + best * dir;
        TracePiece piece{p, at, x, at_vertex, at_edge, -1, -1};
        Scalar u;
        if (through >= 0) {
            piece.to_vertex = through;
        } else {
            const Vec2& e = poly[exit];
            Vec2 rel = x - verts[exit];
            u = e.x.is_zero() ? rel.y / e.y : rel.x / e.x;
            if (u.is_zero())
                piece.to_vertex = exit;
            else if (u == Scalar(1))
                piece.to_vertex = (exit + 1) % n;
            else
                piece.to_edge = exit;
        }

        // the cut is tried before the budget: a stop inside a long piece counts
        // only up to the stop
        if (cut) {
            if (auto frac = cut(piece)) {
                Scalar stop = res.parameter + *frac * best;
                if (stop * stop * dn > budget_sq) return res;
                piece.to = at + (*frac * best) * dir;
                piece.to_vertex = piece.to_edge = -1;
                res.parameter = stop;
                res.pieces.push_back(std::move(piece));
                res.stopped_by_predicate = true;
                return res;
            }
        }
        Scalar reach = res.parameter + best;
        if (reach * reach * dn > budget_sq) return res;
        res.parameter = reach;
        res.pieces.push_back(piece);

        if (piece.to_edge >= 0) {
            EdgeRef other = s.partner({p, exit});
            const auto& oe = s.edge_vector(other);
            at = topo.vertex_positions(other.poly)[other.edge] + (Scalar(1) - u) * oe;
            p = other.poly;
            at_vertex = -1;
            at_edge = other.edge;
            continue;
        }
        Corner c{p, piece.to_vertex};
        Corner arrival = corner_with(topo, c, -dir);
        int cls = topo.class_of(c);
        if (topo.is_singular(cls)) {
            res.hit = TraceHit{cls, arrival};
            return res;
        }
        Corner out = corner_with(topo, arrival, dir);
        p = out.poly;
        at = topo.vertex_positions(p)[out.edge];
        at_vertex = out.edge;
        at_edge = -1;
    }
}

std::vector<Separatrix> outgoing_separatrices(const SurfaceTopology& topo, const Vec2& dir) {
    std::vector<Separatrix> out;
    for (int cls = 0; cls < static_cast<int>(topo.classes().size()); ++cls) {
        if (!topo.is_singular(cls)) continue;
        for (const auto& c : topo.classes()[cls].fan)
            if (topo.corner_contains(c, dir)) out.push_back({cls, c});
    }
    return out;
}

std::vector<long> chain_of_pieces(const SurfaceTopology& topo, const std::vector<TracePiece>& pieces) {
    std::vector<long> chain(topo.glued_edge_count(), 0);
    const auto& s = topo.surface();
    for (const auto& pc : pieces) {
        int n = s.edge_count(pc.poly);
        // push the segment onto the boundary, walking counterclockwise; partial
        // edges cancel against the neighbouring pieces
        int from = pc.from_vertex >= 0 ? pc.from_vertex : (pc.from_edge + 1) % n;
        int to = pc.to_vertex >= 0 ? pc.to_vertex : pc.to_edge;
        if (to < 0) throw std::invalid_argument("piece does not end on the boundary");
        for (int k = from; k != to; k = (k + 1) % n) {
            EdgeRef e{pc.poly, k};
            chain[topo.edge_class(e)] += topo.edge_sign(e);
        }
    }
    return chain;
}

std::variant<SaddleConnection, TraceInconclusive> trace_separatrix(const SurfaceTopology& topo, const Separatrix& sep,
                                                                   const Vec2& dir, const Scalar& budget_sq) {
    auto r = trace_from_corner(topo, sep.corner, dir, budget_sq);
    if (!r.hit) return TraceInconclusive{sep, budget_sq};
    SaddleConnection sc;
    sc.holonomy = r.parameter * dir;
    sc.start = sep;
    sc.end = *r.hit;
    sc.chain = chain_of_pieces(topo, r.pieces);
    sc.pieces = std::move(r.pieces);
    return sc;
}

}  // namespace flatdeck
