#include "flow/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace flatdeck {

Budget Budget::default_for(const PolygonSurface& s) {
    Scalar longest(0);
    for (const auto& poly : s.polygons())
        for (const auto& e : poly) longest = std::max(longest, norm2(e));
    return {Scalar(1000000) * longest};
}

namespace {

bool all_rational(const PolygonSurface& s) {
    for (const auto& poly : s.polygons())
        for (const auto& e : poly)
            if (!e.x.is_rational() || !e.y.is_rational()) return false;
    return true;
}

// horizontal saddle piece inside one polygon, x-range [xa, xb] at height y
struct Shelf {
    Scalar y, xa, xb;
    int saddle;
    Scalar offset;  // distance from the saddle's start to xa
};

std::vector<int> cycle_from(int start, const std::vector<int>& next) {
    std::vector<int> out{start};
    for (int k = next[start]; k != start; k = next[k]) out.push_back(k);
    return out;
}

std::vector<int> rotate_to_min(std::vector<int> w) {
    std::rotate(w.begin(), std::min_element(w.begin(), w.end()), w.end());
    return w;
}

}  // namespace

DecomposeResult decompose(const PolygonSurface& s, const Direction& dir, const Budget& budget) {
    s.require_valid();
    const Mat2 g = dir.frame();
    const Mat2 ginv = g.inverse();
    const PolygonSurface framed = apply_matrix(s, g);
    const SurfaceTopology topo(framed);
    const Vec2 east{Scalar(1), Scalar(0)}, west{Scalar(-1), Scalar(0)};
    const Vec2 north{Scalar(0), Scalar(1)}, south{Scalar(0), Scalar(-1)};
    // a frame length L has original length L * |g^-1 e1|
    const Scalar frame_budget = budget.length_sq / norm2(ginv * east);

    Decomposition d;
    d.direction = dir;
    d.frame = g;
    auto seps = outgoing_separatrices(topo, east);
    std::map<Corner, int> out_id, in_id;
    for (std::size_t k = 0; k < seps.size(); ++k) {
        auto r = trace_separatrix(topo, seps[k], east, frame_budget);
        if (auto* inc = std::get_if<TraceInconclusive>(&r)) {
            if (all_rational(s) && !dir.is_integral())
                return NotPeriodic{dir, "surface periods are rational and the slope is irrational"};
            return Inconclusive{dir, "separatrix " + std::to_string(k) + " did not close within the budget",
                                inc->length_sq};
        }
        auto sc = std::get<SaddleConnection>(std::move(r));
        sc.id = static_cast<int>(k);
        out_id[sc.start.corner] = sc.id;
        in_id[sc.end.arrival] = sc.id;
        d.lengths.push_back(sc.holonomy.x);
        sc.holonomy = ginv * sc.holonomy;
        d.saddles.push_back(std::move(sc));
    }
    const int m = static_cast<int>(d.saddles.size());
    if (m == 0) throw std::logic_error("surface has no separatrices");

    // around each singular point the horizontal separatrices alternate out / in
    std::vector<int> bottom_next(m, -1), top_next(m, -1);
    for (int cls = 0; cls < static_cast<int>(topo.classes().size()); ++cls) {
        if (!topo.is_singular(cls)) continue;
        std::vector<std::pair<bool, int>> events;  // (outgoing?, saddle)
        for (const auto& c : topo.classes()[cls].fan) {
            if (topo.corner_contains(c, east)) events.push_back({true, out_id.at(c)});
            if (topo.corner_contains(c, west)) events.push_back({false, in_id.at(c)});
        }
        int ne = static_cast<int>(events.size());
        for (int k = 0; k < ne; ++k) {
            if (events[k].first) continue;
            const auto& before = events[(k + ne - 1) % ne];
            const auto& after = events[(k + 1) % ne];
            if (!before.first || !after.first) throw std::logic_error("separatrices do not alternate");
            bottom_next[events[k].second] = before.second;
            top_next[events[k].second] = after.second;
        }
    }

    std::vector<std::vector<Shelf>> shelves(framed.polygon_count());
    for (const auto& sc : d.saddles) {
        Scalar offset(0);
        for (const auto& pc : sc.pieces) {
            Scalar len = pc.to.x - pc.from.x;
            shelves[pc.poly].push_back({pc.from.y, pc.from.x, pc.to.x, sc.id, offset});
            int n = framed.edge_count(pc.poly);
            if (pc.from_vertex >= 0 && pc.to_vertex == (pc.from_vertex + 1) % n) {
                // runs along an edge: visible from the polygon across it too
                EdgeRef other = framed.partner({pc.poly, pc.from_vertex});
                Vec2 shift = topo.vertex_positions(other.poly)[(other.edge + 1) % framed.edge_count(other.poly)] -
                             topo.vertex_positions(pc.poly)[pc.from_vertex];
                shelves[other.poly].push_back({pc.from.y + shift.y, pc.from.x + shift.x, pc.to.x + shift.x, sc.id, offset});
            }
            offset += len;
        }
    }

    std::vector<char> seen_bottom(m, 0), seen_top(m, 0);
    Scalar total_len(0);
    for (const auto& l : d.lengths) total_len += l;
    Scalar min_len = *std::min_element(d.lengths.begin(), d.lengths.end());
    // no cylinder is taller than area / shortest saddle
    Scalar h_bound = area(framed) / min_len + Scalar(1);
    d.above.assign(m, -1);
    d.below.assign(m, -1);
    for (int b0 = 0; b0 < m; ++b0) {
        if (seen_bottom[b0]) continue;
        Cylinder cyl;
        cyl.bottom = rotate_to_min(cycle_from(b0, bottom_next));
        for (int x : cyl.bottom) seen_bottom[x] = 1;
        for (int x : cyl.bottom) cyl.width += d.lengths[x];

        Corner up = corner_with(topo, d.saddles[cyl.bottom[0]].start.corner, north);
        int hit_saddle = -1;
        Scalar hit_offset;
        auto cut = [&](const TracePiece& pc) -> std::optional<Scalar> {
            const Shelf* best = nullptr;
            for (const auto& sh : shelves[pc.poly]) {
                if (!(sh.y > pc.from.y) || sh.y > pc.to.y) continue;
                if (pc.from.x < sh.xa || pc.from.x > sh.xb) continue;
                if (!best || sh.y < best->y) best = &sh;
            }
            if (!best) return std::nullopt;
            hit_saddle = best->saddle;
            hit_offset = best->offset + (pc.from.x - best->xa);
            return (best->y - pc.from.y) / (pc.to.y - pc.from.y);
        };
        auto r = trace_from_corner(topo, up, north, h_bound * h_bound, cut);
        if (!r.stopped_by_predicate) {
            if (!r.hit) throw std::logic_error("vertical trace escaped the cylinder");
            hit_saddle = out_id.at(corner_with(topo, corner_with(topo, r.hit->arrival, south), east));
            hit_offset = Scalar(0);
        }
        cyl.height = r.parameter;
        cyl.top = rotate_to_min(cycle_from(hit_saddle, top_next));
        if (seen_top[cyl.top[0]]) throw std::logic_error("top boundary claimed by two cylinders");
        for (int x : cyl.top) seen_top[x] = 1;
        Scalar top_width(0);
        for (int x : cyl.top) top_width += d.lengths[x];
        if (!(top_width == cyl.width)) throw std::logic_error("cylinder boundaries have different lengths");
        // x position of the top word's first saddle, bottom word starting at 0
        Scalar pos = -hit_offset;
        for (int k = hit_saddle; k != cyl.top[0]; k = top_next[k]) pos += d.lengths[k];
        cyl.twist = mod_positive(pos, cyl.width);
        cyl.core_holonomy = ginv * Vec2{cyl.width, Scalar(0)};
        int idx = static_cast<int>(d.cylinders.size());
        for (int x : cyl.bottom) d.above[x] = idx;
        for (int x : cyl.top) d.below[x] = idx;
        d.cylinders.push_back(std::move(cyl));
    }
    for (int x = 0; x < m; ++x) {
        int a = d.below[x], b = d.above[x];
        if (a < 0 || b < 0) throw std::logic_error("saddle connection missing from a boundary");
        if (a != b) d.adjacency.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(d.adjacency.begin(), d.adjacency.end());
    d.adjacency.erase(std::unique(d.adjacency.begin(), d.adjacency.end()), d.adjacency.end());
    return d;
}

Scalar twist_for_rotation(const Decomposition& d, int cyl, std::size_t bottom_start, std::size_t top_start) {
    const auto& c = d.cylinders[cyl];
    Scalar shift(0);
    for (std::size_t k = 0; k < top_start; ++k) shift += d.lengths[c.top[k]];
    for (std::size_t k = 0; k < bottom_start; ++k) shift -= d.lengths[c.bottom[k]];
    return mod_positive(c.twist + shift, c.width);
}

std::vector<Direction> scan_directions(int bound) {
    std::vector<Direction> out;
    for (long p = 0; p <= bound; ++p) {
        for (long q = -bound; q <= bound; ++q) {
            if (std::gcd(p, q) != 1) continue;
            if (p == 0 && q != 1) continue;
            out.push_back(Direction::integer(p, q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ScanResult scan(const PolygonSurface& s, int bound, const Budget& budget, int jobs) {
    if (bound < 1) throw std::invalid_argument("slope bound must be at least 1");
    s.require_valid();
    auto dirs = scan_directions(bound);
    std::vector<std::optional<DecomposeResult>> results(dirs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t k = next++; k < dirs.size(); k = next++) {
            try {
                results[k] = decompose(s, dirs[k], budget);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    ScanResult out;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        auto& r = *results[k];
        if (auto* dec = std::get_if<Decomposition>(&r))
            out.periodic.push_back({dirs[k], std::move(*dec)});
        else if (std::holds_alternative<NotPeriodic>(r))
            out.not_periodic.push_back(dirs[k]);
        else
            out.inconclusive.push_back(dirs[k]);
    }
    return out;
}

}  // namespace flatdeck
