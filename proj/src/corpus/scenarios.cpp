#include "corpus/scenarios.hpp"

#include "corpus/basic.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace flatdeck {

namespace {

Scalar half(long k) { return Scalar(Rational(k, 2)); }

// offsets of the letters along a word, the first letter at `start`
std::vector<std::pair<int, Scalar>> offsets(const std::vector<int>& word, const DiagramParams& p, Scalar start) {
    std::vector<std::pair<int, Scalar>> out;
    for (int l : word) {
        out.emplace_back(l, start);
        start += p.lengths[l];
    }
    return out;
}

Scalar offset_of(const std::vector<int>& word, const DiagramParams& p, int letter, const Scalar& start) {
    for (const auto& [l, x] : offsets(word, p, start))
        if (l == letter) return x;
    throw std::logic_error("letter not in word");
}

// x reduced into [lo, lo + w)
Scalar reduce_into(const Scalar& x, const Scalar& lo, const Scalar& w) { return lo + mod_positive(x - lo, w); }

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

const Direction kHorizontal = Direction::integer(1, 0);
const Direction kVertical = Direction::integer(0, 1);

Decomposition periodic_or_fail(const PolygonSurface& s, const Direction& dir, const std::string& what) {
    auto r = decompose(s, dir, Budget::default_for(s));
    if (!std::holds_alternative<Decomposition>(r))
        throw ConstructionError(what + ": direction " + dir.to_string() + " is not certified periodic");
    return std::get<Decomposition>(std::move(r));
}

std::vector<int> neighbours(const Decomposition& d, int c) {
    std::set<int> out;
    for (int s : d.cylinders[c].top) out.insert(d.above[s]);
    for (int s : d.cylinders[c].bottom) out.insert(d.below[s]);
    out.erase(c);
    return {out.begin(), out.end()};
}

struct Transverse {
    Decomposition dec;
    int d = -1;
};

// first cylinder, over transverse directions of slope up to `bound`, that
// satisfies `pred`
std::optional<Transverse> search(const PolygonSurface& s, int bound,
                                 const std::function<int(const Decomposition&)>& pred) {
    auto budget = Budget::default_for(s);
    for (const auto& dir : scan_directions(bound)) {
        if (dir == kHorizontal) continue;
        auto r = decompose(s, dir, budget);
        if (!std::holds_alternative<Decomposition>(r)) continue;
        auto& dd = std::get<Decomposition>(r);
        int k = pred(dd);
        if (k >= 0) return Transverse{std::move(dd), k};
    }
    return std::nullopt;
}

int horizontal_count(const PolygonSurface& s) {
    if (s.polygon_count() == 0) return 0;
    auto r = decompose(s, kHorizontal, Budget::default_for(s));
    auto* d = std::get_if<Decomposition>(&r);
    return d ? static_cast<int>(d->cylinders.size()) : -1;
}

int simple_count(const Decomposition& d) {
    return static_cast<int>(std::count_if(d.cylinders.begin(), d.cylinders.end(), [](const Cylinder& c) { return c.simple(); }));
}

}  // namespace

PolygonSurface model_surface(ModelTag tag, const DiagramParams& params) {
    return build_from_diagram(reference_diagram(tag), params);
}

DiagramParams unit_params(ModelTag tag) {
    const auto& d = reference_diagram(tag);
    DiagramParams p;
    p.lengths.assign(d.letter_count(), Scalar(1));
    p.heights.assign(d.cylinders.size(), Scalar(1));
    p.twists.assign(d.cylinders.size(), Scalar(0));
    return p;
}

DiagramParams random_params(ModelTag tag, std::mt19937_64& rng) {
    const auto& d = reference_diagram(tag);
    auto inv = involution_check(d, unit_params(tag).lengths);
    if (!inv.found) throw std::logic_error("reference diagram has no involution");
    std::uniform_int_distribution<long> halves(2, 20);
    DiagramParams p = unit_params(tag);
    for (int l = 0; l < d.letter_count(); ++l) {
        int partner = inv.involution[l];
        if (partner < l) p.lengths[l] = p.lengths[partner];
        else p.lengths[l] = half(halves(rng));
    }
    for (std::size_t c = 0; c < d.cylinders.size(); ++c) {
        p.heights[c] = half(halves(rng));
        Scalar w = cylinder_width(d.cylinders[c], p);
        long slots = (2 * w).floor().get_si();
        p.twists[c] = half(std::uniform_int_distribution<long>(0, slots - 1)(rng));
    }
    return p;
}

DiagramParams figure4_params(ModelTag tag) {
    auto p = unit_params(tag);
    if (tag == ModelTag::TwoCyl_23) p.twists[0] = Scalar(1);
    else if (tag == ModelTag::TwoCyl_14) p.twists[0] = Scalar(2);
    else throw std::invalid_argument("Figure 4 uses the two-cylinder models");
    return p;
}

Figure4 figure4_pair(ModelTag tag, const DiagramParams& params, const Scalar& t) {
    // letters (0-based) on both sides of the large cylinder, as in the pictures
    std::pair<int, int> letters;
    if (tag == ModelTag::TwoCyl_23) letters = {3, 4};
    else if (tag == ModelTag::TwoCyl_14) letters = {2, 4};
    else throw std::invalid_argument("Figure 4 uses the two-cylinder models");
    const auto& big = reference_diagram(tag).cylinders[0];
    auto m = model_surface(tag, params);
    const Scalar w = cylinder_width(big, params), h = params.heights[0], tw = params.twists[0];
    auto [x, y] = letters;
    Scalar bx = offset_of(big.bottom, params, x, Scalar(0)), tx = offset_of(big.top, params, x, tw);
    // lift y's strip between the strip of x and its translate by w, so the
    // two simple cylinders are disjoint
    Scalar lo = params.lengths[x];
    Scalar by = reduce_into(offset_of(big.bottom, params, y, Scalar(0)), bx + lo, w);
    Scalar ty = reduce_into(offset_of(big.top, params, y, tw), tx + lo, w);
    Vec2 ux{tx - bx, h}, uy{ty - by, h};
    Figure4 out{m, m, letters, {Direction(ux), Direction(uy)}, {Scalar(0), Scalar(0)}};
    if (t.is_zero()) return out;

    const std::string what = "Figure 4";
    Homology hom(m);
    auto dh = periodic_or_fail(m, kHorizontal, what);
    // simple cylinders with the strip's holonomy and area lying inside the
    // large horizontal cylinder; parallel copies are told apart by trying
    auto matching = [&](const Decomposition& d, const Vec2& u, int letter) {
        std::vector<int> out;
        for (int k = 0; k < static_cast<int>(d.cylinders.size()); ++k) {
            const auto& c = d.cylinders[k];
            if (c.simple() && c.area() == params.lengths[letter] * h && (c.core_holonomy == u || c.core_holonomy == -u))
                out.push_back(k);
        }
        return out;
    };
    auto strips = [&](const Decomposition& d, const Vec2& u, int letter) {
        std::vector<int> out;
        for (int k : matching(d, u, letter)) {
            for (int a = 0; a < static_cast<int>(dh.cylinders.size()); ++a)
                if (dh.cylinders[a].top.size() == big.top.size() && portion(hom, d, k, dh, {a}) == Scalar(1)) out.push_back(k);
        }
        return out;
    };
    auto dx = periodic_or_fail(m, out.directions.first, what);
    auto dy = periodic_or_fail(m, out.directions.second, what);
    auto sx = strips(dx, ux, x), sy = strips(dy, uy, y);
    if (sx.empty() || sy.empty()) throw ConstructionError(what + ": transverse simple cylinder missing in the large cylinder");
    // a crossing of a sheared cylinder adds -t h |p_y| to the core's vertical
    // holonomy; the two contributions cancel
    Scalar px = abs(out.directions.first.vector().y), py = abs(out.directions.second.vector().y);
    const bool parallel = out.directions.first == out.directions.second;
    auto budget = Budget::default_for(m);
    for (int kx : sx) {
        for (int ky : sy) {
            if (parallel && kx == ky) continue;
            Scalar hx = dx.cylinders[kx].height, hy = dy.cylinders[ky].height;
            Scalar tx_shear = t * dx.cylinders[kx].width / hx;
            Scalar ty_shear = -tx_shear * hx * px / (hy * py);
            PolygonSurface result;
            if (parallel) {
                result = cylinder_deform(m, out.directions.first, {{kx, tx_shear}, {ky, ty_shear}}, budget);
            } else {
                // the strips are disjoint, so the second survives the first shear
                auto m1 = cylinder_deform(m, out.directions.first, {{kx, tx_shear}}, budget);
                auto dy1 = periodic_or_fail(m1, out.directions.second, what);
                // the large cylinder is gone after one shear; parallel
                // candidates are told apart by the final cylinder count
                for (int k : matching(dy1, uy, y)) {
                    if (dy1.cylinders[k].height != hy) continue;
                    result = cylinder_deform(m1, out.directions.second, {{k, ty_shear}}, Budget::default_for(m1));
                    if (horizontal_count(result) == 3) break;
                }
            }
            if (horizontal_count(result) != 3) continue;
            out.after = std::move(result);
            out.shears = {tx_shear, ty_shear};
            return out;
        }
    }
    throw ConstructionError(what + ": no pair of transverse simple cylinders shears into three horizontal cylinders");
}

const Designated& CaseConfig::get(const std::string& name) const {
    for (const auto& d : cylinders)
        if (d.name == name) return d;
    throw std::out_of_range("no designated cylinder " + name);
}

const Designated& CaseConfig::get_after(const std::string& name) const {
    for (const auto& d : after_cylinders)
        if (d.name == name) return d;
    throw std::out_of_range("no designated cylinder " + name);
}

const char* case_name(CaseId id) {
    switch (id) {
    case CaseId::One: return "1";
    case CaseId::TwoA: return "2A";
    case CaseId::TwoB: return "2B";
    case CaseId::Three: return "3";
    }
    return "?";
}

std::optional<CaseId> case_from_name(const std::string& name) {
    for (auto id : {CaseId::One, CaseId::TwoA, CaseId::TwoB, CaseId::Three})
        if (name == case_name(id)) return id;
    return std::nullopt;
}

ModelTag case_model(CaseId id) {
    return id == CaseId::TwoA || id == CaseId::TwoB ? ModelTag::ThreeCyl_I : ModelTag::ThreeCyl_II;
}

DiagramParams case_params(CaseId id) {
    auto p = unit_params(case_model(id));
    // twists read off the pictures, one unit per drawn square side
    if (id == CaseId::TwoA || id == CaseId::TwoB) p.twists[2] = Scalar(1);
    if (id == CaseId::Three) p.twists[0] = half(1);
    return p;
}

namespace {

void require_three(const Decomposition& dh, const std::string& what) {
    if (dh.cylinders.size() != 3)
        throw ConstructionError(what + ": expected 3 horizontal cylinders, found " + std::to_string(dh.cylinders.size()));
}

CaseConfig case_one(const PolygonSurface& s, int bound) {
    const std::string what = "case 1";
    auto dh = periodic_or_fail(s, kHorizontal, what);
    require_three(dh, what);
    Homology h(s);
    for (int c1 = 0; c1 < 3; ++c1) {
        if (!dh.cylinders[c1].simple()) continue;
        auto nb = neighbours(dh, c1);
        if (nb.size() != 1) continue;
        int c2 = nb[0], c3 = 3 - c1 - c2;
        auto found = search(s, bound, [&](const Decomposition& dd) {
            for (int k = 0; k < static_cast<int>(dd.cylinders.size()); ++k) {
                if (portion(h, dh, c1, dd, {k}) == Scalar(1) && scalar_sign(portion(h, dh, c2, dd, {k})) > 0 &&
                    portion(h, dh, c3, dd, {k}).is_zero())
                    return k;
            }
            return -1;
        });
        if (!found) continue;
        return {CaseId::One, s,
                {{"C1", kHorizontal, c1}, {"C2", kHorizontal, c2}, {"C3", kHorizontal, c3},
                 {"D", found->dec.direction, found->d}},
                std::nullopt, {}};
    }
    throw ConstructionError(what + ": no transverse cylinder D containing C1, meeting C2 and missing C3");
}

CaseConfig case_two(CaseId id, const PolygonSurface& s, int bound) {
    const std::string what = std::string("case ") + case_name(id);
    auto dh = periodic_or_fail(s, kHorizontal, what);
    require_three(dh, what);
    if (simple_count(dh) != 1) throw ConstructionError(what + ": expected exactly one simple horizontal cylinder");
    int c1 = 0;
    while (!dh.cylinders[c1].simple()) ++c1;
    auto nb = neighbours(dh, c1);
    if (nb.size() != 1) throw ConstructionError(what + ": simple cylinder C1 has several neighbours");
    // 2A: C1 borders C2; 2B: C1 borders the free cylinder C3
    int middle = nb[0], other = 3 - c1 - middle;
    int c2 = id == CaseId::TwoA ? middle : other;
    int c3 = id == CaseId::TwoA ? other : middle;
    if (!contains(neighbours(dh, c3), c2)) throw ConstructionError(what + ": C2 and C3 are not adjacent");
    int inside = id == CaseId::TwoA ? c3 : c2;
    Homology h(s);
    int d_prime = -1;
    auto found = search(s, bound, [&](const Decomposition& dd) {
        int n = static_cast<int>(dd.cylinders.size());
        for (int k = 0; k < n; ++k) {
            if (!portion(h, dh, c1, dd, {k}).is_zero()) continue;
            if (scalar_sign(portion(h, dh, c2, dd, {k})) <= 0 || scalar_sign(portion(h, dh, c3, dd, {k})) <= 0) continue;
            for (int j = 0; j < n; ++j) {
                if (j != k && portion(h, dd, j, dh, {inside}) == Scalar(1)) {
                    d_prime = j;
                    return k;
                }
            }
        }
        return -1;
    });
    if (!found)
        throw ConstructionError(what + ": no transverse D meeting C2 and C3 with a parallel D' inside " +
                                (id == CaseId::TwoA ? "C3" : "C2"));
    return {id, s,
            {{"C1", kHorizontal, c1}, {"C2", kHorizontal, c2}, {"C3", kHorizontal, c3},
             {"D", found->dec.direction, found->d}, {"D'", found->dec.direction, d_prime}},
            std::nullopt, {}};
}

// C1, C2, C3 and the saddles "1", "3" of the third case, as saddle ids
struct CaseThreeRoles {
    int c1, c2, c3, one, three;
};

CaseThreeRoles case_three_roles(const Decomposition& dh, const std::string& what) {
    require_three(dh, what);
    if (simple_count(dh) != 2) throw ConstructionError(what + ": expected two simple horizontal cylinders");
    CaseThreeRoles r{};
    r.c3 = 0;
    while (dh.cylinders[r.c3].simple()) ++r.c3;
    const auto& big = dh.cylinders[r.c3];
    r.three = -1;
    for (int l : big.top)
        if (contains(big.bottom, l)) r.three = l;
    if (r.three < 0) throw ConstructionError(what + ": C3 has no saddle on both boundaries");
    auto at = [](const std::vector<int>& w, int l, int step) {
        auto n = static_cast<int>(w.size());
        auto i = static_cast<int>(std::find(w.begin(), w.end(), l) - w.begin());
        return w[((i + step) % n + n) % n];
    };
    r.one = at(big.bottom, r.three, -1);
    int p = at(big.top, r.three, 1);
    r.c1 = -1;
    for (int c = 0; c < 3; ++c)
        if (c != r.c3 && dh.cylinders[c].top == std::vector<int>{r.one}) r.c1 = c;
    if (r.c1 < 0 || dh.cylinders[r.c1].bottom != std::vector<int>{p})
        throw ConstructionError(what + ": no simple cylinder C1 sitting on saddle 1");
    r.c2 = 3 - r.c1 - r.c3;
    return r;
}

CaseConfig case_three(const PolygonSurface& s, int bound) {
    const std::string what = "case 3";
    auto dh = periodic_or_fail(s, kHorizontal, what);
    auto r = case_three_roles(dh, what);
    Homology h(s);
    auto found = search(s, bound, [&](const Decomposition& dd) {
        for (int k = 0; k < static_cast<int>(dd.cylinders.size()); ++k)
            if (portion(h, dd, k, dh, {r.c3}) == Scalar(1)) return k;
        return -1;
    });
    if (!found) throw ConstructionError(what + ": no cylinder D inside C3");
    CaseConfig cfg{CaseId::Three, s,
                   {{"C1", kHorizontal, r.c1}, {"C2", kHorizontal, r.c2}, {"C3", kHorizontal, r.c3},
                    {"D", found->dec.direction, found->d}},
                   std::nullopt, {}};

    // stretching D horizontally changes only the length of saddle 3
    auto [diag, p] = raw_diagram(dh);
    p.lengths[r.three] = p.lengths[r.one];
    // shear the whole surface so that C1 has no twist, then shear C3 until
    // saddle 3 on its top sits right above saddle 1 on its bottom
    Scalar slope = -p.twists[r.c1] / p.heights[r.c1];
    for (std::size_t c = 0; c < p.twists.size(); ++c) p.twists[c] += slope * p.heights[c];
    const auto& big = diag.cylinders[r.c3];
    Scalar w3 = cylinder_width(big, p);
    p.twists[r.c3] = mod_positive(offset_of(big.bottom, p, r.one, Scalar(0)) - offset_of(big.top, p, r.three, Scalar(0)), w3);
    for (std::size_t c = 0; c < p.twists.size(); ++c)
        p.twists[c] = mod_positive(p.twists[c], cylinder_width(diag.cylinders[c], p));
    auto after = build_from_diagram(diag, p);

    auto dh2 = periodic_or_fail(after, kHorizontal, what);
    auto r2 = case_three_roles(dh2, what);
    auto dv = periodic_or_fail(after, kVertical, what);
    Homology h2(after);
    const auto& c1 = dh2.cylinders[r2.c1];
    const auto& c3 = dh2.cylinders[r2.c3];
    Scalar loop = c1.height + 2 * c3.height;
    int e = -1;
    for (int k = 0; k < static_cast<int>(dv.cylinders.size()); ++k) {
        if (portion(h2, dh2, r2.c1, dv, {k}) == Scalar(1) && norm2(dv.cylinders[k].core_holonomy) == loop * loop) e = k;
    }
    if (e < 0) throw ConstructionError(what + ": no vertical cylinder E through C1 and saddles 1 and 3");
    cfg.after = std::move(after);
    cfg.after_cylinders = {{"C1", kHorizontal, r2.c1}, {"C2", kHorizontal, r2.c2}, {"C3", kHorizontal, r2.c3},
                           {"E", kVertical, e}};
    return cfg;
}

}  // namespace

CaseConfig case_config(CaseId id, const DiagramParams& params, int bound) {
    auto s = model_surface(case_model(id), params);
    switch (id) {
    case CaseId::One: return case_one(s, bound);
    case CaseId::TwoA:
    case CaseId::TwoB: return case_two(id, s, bound);
    case CaseId::Three: return case_three(s, bound);
    }
    throw std::logic_error("unknown case");
}

CaseConfig case_config(CaseId id) { return case_config(id, case_params(id)); }

std::vector<std::string> corpus_names() {
    std::vector<std::string> out{"torus", "S1", "12gon"};
    for (auto t : all_models()) out.emplace_back(model_name(t));
    for (const char* n : {"figure4-top", "figure4-top-sheared", "figure4-bottom", "figure4-bottom-sheared", "case1",
                          "case2A", "case2B", "case3", "case3-after"})
        out.emplace_back(n);
    return out;
}

PolygonSurface corpus_surface(const std::string& name, std::optional<std::uint64_t> seed) {
    if (name == "torus") return unit_torus();
    if (name == "S1") return s1_surface();
    if (name == "12gon") return regular_12gon();
    auto params_for = [&](ModelTag tag, DiagramParams fallback) {
        if (!seed) return fallback;
        std::mt19937_64 rng(*seed);
        return random_params(tag, rng);
    };
    if (auto tag = model_from_name(name)) return model_surface(*tag, params_for(*tag, unit_params(*tag)));
    if (name.rfind("figure4-", 0) == 0) {
        bool top = name.rfind("figure4-top", 0) == 0;
        auto tag = top ? ModelTag::TwoCyl_23 : ModelTag::TwoCyl_14;
        auto f = figure4_pair(tag, params_for(tag, figure4_params(tag)));
        return name.ends_with("-sheared") ? f.after : f.before;
    }
    if (name.rfind("case", 0) == 0) {
        std::string rest = name.substr(4);
        bool after = rest.ends_with("-after");
        if (after) rest.resize(rest.size() - 6);
        if (auto id = case_from_name(rest); id && (!after || *id == CaseId::Three)) {
            auto cfg = case_config(*id, params_for(case_model(*id), case_params(*id)));
            return after ? *cfg.after : cfg.surface;
        }
    }
    throw std::invalid_argument("unknown corpus surface: " + name);
}

}  // namespace flatdeck
