#include "surface/surface.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flatdeck {

PolygonSurface::PolygonSurface(long field_d, std::vector<std::vector<Vec2>> polygons,
                               std::vector<std::pair<EdgeRef, EdgeRef>> gluings)
    : d_(field_d), polygons_(std::move(polygons)), gluings_(std::move(gluings)) {
    partner_.resize(polygons_.size());
    for (std::size_t p = 0; p < polygons_.size(); ++p) partner_[p].assign(polygons_[p].size(), EdgeRef{-1, -1});
    auto in_range = [&](EdgeRef e) {
        return e.poly >= 0 && e.poly < polygon_count() && e.edge >= 0 && e.edge < edge_count(e.poly);
    };
    for (const auto& [a, b] : gluings_) {
        if (!in_range(a) || !in_range(b)) continue;
        // first assignment wins; duplicates are reported by validate()
        if (partner_[a.poly][a.edge].poly < 0) partner_[a.poly][a.edge] = b;
        if (partner_[b.poly][b.edge].poly < 0) partner_[b.poly][b.edge] = a;
    }
}

std::vector<Vec2> PolygonSurface::vertices(int p) const {
    std::vector<Vec2> out;
    out.reserve(polygons_[p].size());
    Vec2 cur{Scalar(0), Scalar(0)};
    for (const auto& e : polygons_[p]) {
        out.push_back(cur);
        cur += e;
    }
    return out;
}

void PolygonSurface::require_valid() const {
    auto r = validate(*this);
    if (!r.ok()) throw InvalidSurface(r);
}

namespace {

std::string describe(const ValidationReport& r) {
    std::ostringstream os;
    os << "invalid surface:";
    for (const auto& v : r.violations) {
        os << " [" << v.kind;
        if (v.polygon >= 0) os << " polygon " << v.polygon;
        if (v.edge >= 0) os << " edge " << v.edge;
        os << "]";
    }
    return os.str();
}

}  // namespace

InvalidSurface::InvalidSurface(const ValidationReport& r) : std::invalid_argument(describe(r)) {}

ValidationReport validate(const PolygonSurface& s) {
    ValidationReport rep;
    auto add = [&](std::string kind, int p, int e, std::string msg) {
        rep.violations.push_back({std::move(kind), p, e, std::move(msg)});
    };
    if (!is_square_free(s.field())) add("bad field", -1, -1, "field discriminant must be square-free and >= 1");
    if (s.polygon_count() == 0) {
        add("empty surface", -1, -1, "no polygons");
        return rep;
    }
    const Vec2 east{Scalar(1), Scalar(0)};
    for (int p = 0; p < s.polygon_count(); ++p) {
        const auto& poly = s.polygon(p);
        int n = static_cast<int>(poly.size());
        if (n < 3) {
            add("degenerate polygon", p, -1, "polygon has fewer than 3 edges");
            continue;
        }
        bool field_ok = true;
        Vec2 sum{Scalar(0), Scalar(0)};
        for (int i = 0; i < n; ++i) {
            const auto& e = poly[i];
            for (const Scalar* c : {&e.x, &e.y}) {
                if (c->field() != 1 && c->field() != s.field()) field_ok = false;
            }
            if (e.is_zero()) add("zero edge", p, i, "edge vector is zero");
            sum += e;
        }
        if (!field_ok) add("field mismatch", p, -1, "coordinates outside the declared field");
        if (!sum.is_zero()) add("open polygon", p, -1, "edge vectors do not sum to zero");
        // convex and positively oriented: every turn is left or straight, and
        // the edge directions wind around exactly once
        bool convex = true;
        int wraps = 0;
        for (int i = 0; i < n; ++i) {
            const auto& a = poly[i];
            const auto& b = poly[(i + 1) % n];
            int c = scalar_sign(cross(a, b));
            if (c < 0 || (c == 0 && scalar_sign(dot(a, b)) < 0)) convex = false;
            if (ccw_before(east, b, a)) ++wraps;
        }
        if (!convex || wraps != 1) add("non-convex polygon", p, -1, "polygon is not convex and counterclockwise");
    }
    // gluing must be a perfect matching of directed edges
    std::vector<std::vector<int>> uses(s.polygon_count());
    for (int p = 0; p < s.polygon_count(); ++p) uses[p].assign(s.edge_count(p), 0);
    for (std::size_t g = 0; g < s.gluings().size(); ++g) {
        auto [a, b] = s.gluings()[g];
        bool ok = true;
        for (EdgeRef e : {a, b}) {
            if (e.poly < 0 || e.poly >= s.polygon_count() || e.edge < 0 || e.edge >= s.edge_count(e.poly)) {
                add("bad edge reference", e.poly, e.edge, "gluing " + std::to_string(g) + " refers to a missing edge");
                ok = false;
            }
        }
        if (!ok) continue;
        if (a == b) add("self gluing", a.poly, a.edge, "edge glued to itself");
        uses[a.poly][a.edge]++;
        uses[b.poly][b.edge]++;
        if (!(s.edge_vector(a) + s.edge_vector(b)).is_zero())
            add("non-translation gluing", a.poly, a.edge,
                "edge vectors " + s.edge_vector(a).to_string() + " and " + s.edge_vector(b).to_string() +
                    " are not opposite");
    }
    for (int p = 0; p < s.polygon_count(); ++p) {
        for (int i = 0; i < s.edge_count(p); ++i) {
            if (uses[p][i] == 0) add("unglued edge", p, i, "edge has no partner");
            if (uses[p][i] > 1) add("multiply glued edge", p, i, "edge appears in several gluings");
        }
    }
    // connectivity of the gluing graph
    std::vector<int> seen(s.polygon_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int i = 0; i < s.edge_count(p); ++i) {
            if (!s.has_partner({p, i})) continue;
            int q = s.partner({p, i}).poly;
            if (!seen[q]) {
                seen[q] = 1;
                stack.push_back(q);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) add("disconnected", -1, -1, "gluing graph is not connected");
    return rep;
}

SurfaceTopology::SurfaceTopology(const PolygonSurface& s) : surface_(s) {
    s.require_valid();
    int np = s.polygon_count();
    corner_class_.resize(np);
    fan_pos_.resize(np);
    positions_.resize(np);
    edge_id_.resize(np);
    edge_sign_.resize(np);
    for (int p = 0; p < np; ++p) {
        corner_class_[p].assign(s.edge_count(p), -1);
        fan_pos_[p].assign(s.edge_count(p), -1);
        edge_id_[p].assign(s.edge_count(p), -1);
        edge_sign_[p].assign(s.edge_count(p), 0);
        positions_[p] = s.vertices(p);
    }
    for (int p = 0; p < np; ++p) {
        for (int i = 0; i < s.edge_count(p); ++i) {
            if (edge_id_[p][i] >= 0) continue;
            EdgeRef e{p, i};
            EdgeRef f = s.partner(e);
            int id = static_cast<int>(edge_classes_.size());
            edge_classes_.push_back(e);
            edge_id_[p][i] = id;
            edge_sign_[p][i] = 1;
            edge_id_[f.poly][f.edge] = id;
            edge_sign_[f.poly][f.edge] = -1;
        }
    }
    const Vec2 east{Scalar(1), Scalar(0)};
    for (int p = 0; p < np; ++p) {
        for (int i = 0; i < s.edge_count(p); ++i) {
            if (corner_class_[p][i] >= 0) continue;
            VertexClass vc;
            int cls = static_cast<int>(classes_.size());
            Corner c{p, i};
            int turns = 0;
            do {
                corner_class_[c.poly][c.edge] = cls;
                fan_pos_[c.poly][c.edge] = static_cast<int>(vc.fan.size());
                vc.fan.push_back(c);
                // count passes of the rotating ray through the east direction
                Vec2 from = sector_start(c), to = sector_end(c);
                if (same_direction(to, east) || ccw_before(east, to, from)) ++turns;
                c = ccw_next(c);
            } while (!(c == Corner{p, i}));
            vc.order = turns - 1;
            classes_.push_back(std::move(vc));
        }
    }
    bool any_zero = std::any_of(classes_.begin(), classes_.end(), [](const VertexClass& v) { return v.order > 0; });
    singular_.resize(classes_.size());
    for (std::size_t k = 0; k < classes_.size(); ++k) singular_[k] = !any_zero || classes_[k].order > 0;
}

Corner SurfaceTopology::ccw_next(Corner c) const {
    const auto& s = surface_;
    return s.partner({c.poly, s.prev_edge(c.poly, c.edge)});
}

Vec2 SurfaceTopology::sector_start(Corner c) const { return surface_.edge_vector(c); }

Vec2 SurfaceTopology::sector_end(Corner c) const {
    return -surface_.edge_vector({c.poly, surface_.prev_edge(c.poly, c.edge)});
}

bool SurfaceTopology::corner_contains(Corner c, const Vec2& dir) const {
    return sector_contains(sector_start(c), sector_end(c), dir);
}

int SurfaceTopology::euler_characteristic() const {
    return static_cast<int>(classes_.size()) - glued_edge_count() + surface_.polygon_count();
}

std::string StratumSignature::to_string() const {
    std::string out = "H(";
    for (std::size_t i = 0; i < zero_orders.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(zero_orders[i]);
    }
    for (int m = 0; m < marked_points; ++m) out += (zero_orders.empty() && m == 0) ? "0" : ",0";
    return out + ")";
}

StratumSignature stratum(const PolygonSurface& s) {
    SurfaceTopology topo(s);
    StratumSignature sig;
    int total = 0;
    for (const auto& vc : topo.classes()) {
        if (vc.order > 0)
            sig.zero_orders.push_back(vc.order);
        else
            ++sig.marked_points;
        total += vc.order;
    }
    std::sort(sig.zero_orders.rbegin(), sig.zero_orders.rend());
    int chi = topo.euler_characteristic();
    if ((2 - chi) % 2 != 0 || total != -chi)
        throw CorruptComplex("cone angles give sum k = " + std::to_string(total) + " but Euler characteristic is " +
                             std::to_string(chi));
    sig.genus = (2 - chi) / 2;
    return sig;
}

Scalar polygon_area(const std::vector<Vec2>& edges) {
    Scalar twice(0);
    Vec2 cur{Scalar(0), Scalar(0)};
    for (const auto& e : edges) {
        Vec2 next = cur + e;
        twice += cross(cur, next);
        cur = next;
    }
    return twice / Scalar(2);
}

Scalar area(const PolygonSurface& s) {
    Scalar total(0);
    for (const auto& poly : s.polygons()) total += polygon_area(poly);
    return total;
}

PolygonSurface apply_matrix(const PolygonSurface& s, const Mat2& m) {
    if (scalar_sign(m.det()) <= 0) throw std::invalid_argument("matrix must have positive determinant");
    std::vector<std::vector<Vec2>> polys = s.polygons();
    long d = s.field();
    for (const Scalar* c : {&m.a, &m.b, &m.c, &m.d}) {
        if (c->field() != 1) {
            if (d != 1 && d != c->field()) throw FieldMismatch("matrix entries outside the surface field");
            d = c->field();
        }
    }
    for (auto& poly : polys)
        for (auto& e : poly) e = m * e;
    return PolygonSurface(d, std::move(polys), s.gluings());
}

}  // namespace flatdeck
