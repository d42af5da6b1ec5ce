#include "diagram/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flatdeck {

int CylinderDiagram::letter_count() const {
    int m = 0;
    for (const auto& c : cylinders) m += static_cast<int>(c.top.size());
    return m;
}

void CylinderDiagram::check() const {
    if (cylinders.empty()) throw std::invalid_argument("diagram has no cylinders");
    int m = letter_count();
    std::vector<int> tops(m, 0), bottoms(m, 0);
    for (const auto& c : cylinders) {
        if (c.top.empty() || c.bottom.empty()) throw std::invalid_argument("cylinder with an empty boundary word");
        for (int x : c.top) {
            if (x < 0 || x >= m) throw std::invalid_argument("letter out of range: " + std::to_string(x + 1));
            tops[x]++;
        }
        for (int x : c.bottom) {
            if (x < 0 || x >= m) throw std::invalid_argument("letter out of range: " + std::to_string(x + 1));
            bottoms[x]++;
        }
    }
    for (int x = 0; x < m; ++x)
        if (tops[x] != 1 || bottoms[x] != 1)
            throw std::invalid_argument("letter " + std::to_string(x + 1) + " must occur once on top and once on bottom");
}

std::string CylinderDiagram::to_text() const {
    std::ostringstream os;
    for (const auto& c : cylinders) {
        os << "top:";
        for (int x : c.top) os << ' ' << x + 1;
        os << " | bottom:";
        for (int x : c.bottom) os << ' ' << x + 1;
        os << '\n';
    }
    return os.str();
}

CylinderDiagram CylinderDiagram::parse(const std::string& text) {
    CylinderDiagram d;
    std::istringstream in(text);
    std::string line;
    auto words = [](const std::string& part, const std::string& key) {
        auto at = part.find(key);
        if (at == std::string::npos) throw std::invalid_argument("expected '" + key + "' in diagram line");
        std::istringstream ws(part.substr(at + key.size()));
        std::vector<int> out;
        std::string tok;
        while (ws >> tok) out.push_back(std::stoi(tok) - 1);
        return out;
    };
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto bar = line.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("diagram line needs 'top: ... | bottom: ...'");
        d.cylinders.push_back({words(line.substr(0, bar), "top:"), words(line.substr(bar + 1), "bottom:")});
    }
    d.check();
    return d;
}

Scalar cylinder_width(const DiagramCylinder& c, const DiagramParams& p) {
    Scalar w(0);
    for (int x : c.bottom) w += p.lengths[x];
    return w;
}

namespace {

using Key = std::vector<std::vector<int>>;

template <class T>
std::size_t least_rotation(const std::vector<T>& w) {
    std::size_t best = 0;
    for (std::size_t r = 1; r < w.size(); ++r) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            const T& a = w[(r + j) % w.size()];
            const T& b = w[(best + j) % w.size()];
            if (a < b) {
                best = r;
                break;
            }
            if (b < a) break;
        }
    }
    return best;
}

struct Candidate {
    std::vector<int> order;
    std::vector<std::size_t> top_rot, bottom_rot;
    std::vector<int> label;
};

std::vector<Scalar> param_vector(const CylinderDiagram& d, const DiagramParams& p, const Candidate& c,
                                 DiagramParams* out = nullptr) {
    int m = d.letter_count();
    DiagramParams np;
    np.lengths.assign(m, Scalar(0));
    for (int x = 0; x < m; ++x) np.lengths[c.label[x]] = p.lengths[x];
    for (std::size_t k = 0; k < c.order.size(); ++k) {
        int ci = c.order[k];
        const auto& cyl = d.cylinders[ci];
        np.heights.push_back(p.heights[ci]);
        Scalar shift = p.twists[ci];
        for (std::size_t j = 0; j < c.top_rot[k]; ++j) shift += p.lengths[cyl.top[j]];
        for (std::size_t j = 0; j < c.bottom_rot[k]; ++j) shift -= p.lengths[cyl.bottom[j]];
        np.twists.push_back(mod_positive(shift, cylinder_width(cyl, p)));
    }
    std::vector<Scalar> v = np.lengths;
    v.insert(v.end(), np.heights.begin(), np.heights.end());
    v.insert(v.end(), np.twists.begin(), np.twists.end());
    if (out) *out = std::move(np);
    return v;
}

}  // namespace

Labeling canonical(const CylinderDiagram& d, const DiagramParams* params) {
    d.check();
    const int n = static_cast<int>(d.cylinders.size());
    const int m = d.letter_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::optional<Key> best;
    std::vector<Candidate> ties;
    do {
        bool sorted = true;
        for (int k = 1; k < n; ++k)
            if (d.cylinders[order[k - 1]].top.size() > d.cylinders[order[k]].top.size()) sorted = false;
        if (!sorted) continue;
        std::vector<std::size_t> rot(n, 0);
        for (;;) {
            Candidate c{order, rot, {}, std::vector<int>(m, -1)};
            int next = 0;
            for (int k = 0; k < n; ++k) {
                const auto& top = d.cylinders[order[k]].top;
                for (std::size_t j = 0; j < top.size(); ++j) c.label[top[(rot[k] + j) % top.size()]] = next++;
            }
            Key key;
            for (int k = 0; k < n; ++k) {
                std::vector<int> w;
                for (int x : d.cylinders[order[k]].bottom) w.push_back(c.label[x]);
                std::size_t r = least_rotation(w);
                c.bottom_rot.push_back(r);
                std::rotate(w.begin(), w.begin() + static_cast<long>(r), w.end());
                key.push_back(std::vector<int>{static_cast<int>(w.size())});
                key.push_back(std::move(w));
            }
            if (!best || key < *best) {
                best = key;
                ties.clear();
            }
            if (key == *best) ties.push_back(std::move(c));
            // odometer over top rotations
            int k = 0;
            while (k < n && ++rot[k] == d.cylinders[order[k]].top.size()) rot[k++] = 0;
            if (k == n) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    std::size_t pick = 0;
    if (params) {
        std::vector<Scalar> best_v = param_vector(d, *params, ties[0]);
        for (std::size_t t = 1; t < ties.size(); ++t) {
            auto v = param_vector(d, *params, ties[t]);
            if (std::lexicographical_compare(v.begin(), v.end(), best_v.begin(), best_v.end())) {
                best_v = std::move(v);
                pick = t;
            }
        }
    }
    const Candidate& c = ties[pick];
    Labeling out;
    out.letter_map = c.label;
    out.cylinder_map = c.order;
    for (int k = 0; k < n; ++k) {
        const auto& cyl = d.cylinders[c.order[k]];
        DiagramCylinder nc;
        for (std::size_t j = 0; j < cyl.top.size(); ++j) nc.top.push_back(c.label[cyl.top[(c.top_rot[k] + j) % cyl.top.size()]]);
        for (std::size_t j = 0; j < cyl.bottom.size(); ++j)
            nc.bottom.push_back(c.label[cyl.bottom[(c.bottom_rot[k] + j) % cyl.bottom.size()]]);
        out.diagram.cylinders.push_back(std::move(nc));
    }
    if (params) {
        DiagramParams np;
        param_vector(d, *params, c, &np);
        out.params = std::move(np);
    }
    return out;
}

bool diagrams_isomorphic(const CylinderDiagram& a, const CylinderDiagram& b) {
    if (a.letter_count() != b.letter_count() || a.cylinders.size() != b.cylinders.size()) return false;
    return canonical(a).diagram == canonical(b).diagram;
}

std::pair<CylinderDiagram, DiagramParams> raw_diagram(const Decomposition& d) {
    CylinderDiagram diag;
    DiagramParams p;
    p.lengths = d.lengths;
    for (const auto& c : d.cylinders) {
        diag.cylinders.push_back({c.top, c.bottom});
        p.heights.push_back(c.height);
        p.twists.push_back(c.twist);
    }
    return {diag, p};
}

Labeling diagram_of(const Decomposition& d) {
    auto [diag, p] = raw_diagram(d);
    return canonical(diag, &p);
}

const char* model_name(ModelTag t) {
    switch (t) {
        case ModelTag::ThreeCyl_I: return "ThreeCyl_I";
        case ModelTag::ThreeCyl_II: return "ThreeCyl_II";
        case ModelTag::TwoCyl_23: return "TwoCyl_23";
        case ModelTag::TwoCyl_14: return "TwoCyl_14";
        case ModelTag::OneCyl: return "OneCyl";
    }
    return "?";
}

const std::vector<ModelTag>& all_models() {
    static const std::vector<ModelTag> tags = {ModelTag::ThreeCyl_I, ModelTag::ThreeCyl_II, ModelTag::TwoCyl_23,
                                               ModelTag::TwoCyl_14, ModelTag::OneCyl};
    return tags;
}

std::optional<ModelTag> model_from_name(const std::string& name) {
    for (auto t : all_models())
        if (name == model_name(t)) return t;
    return std::nullopt;
}

const CylinderDiagram& reference_diagram(ModelTag t) {
    // transcribed from the three model pictures; words read left to right,
    // letters 1-based as drawn
    static const std::vector<CylinderDiagram> refs = [] {
        auto dg = [](const std::string& text) { return CylinderDiagram::parse(text); };
        return std::vector<CylinderDiagram>{
            dg("top: 5 | bottom: 2\n"
               "top: 2 4 | bottom: 1 5\n"
               "top: 1 3 | bottom: 4 3\n"),
            dg("top: 5 | bottom: 2\n"
               "top: 4 2 1 | bottom: 1 5 3\n"
               "top: 3 | bottom: 4\n"),
            dg("top: 3 4 5 | bottom: 5 4 2\n"
               "top: 1 2 | bottom: 1 3\n"),
            dg("top: 2 3 4 5 | bottom: 5 4 3 1\n"
               "top: 1 | bottom: 2\n"),
            dg("top: 1 2 3 4 5 | bottom: 5 4 3 2 1\n"),
        };
    }();
    return refs[static_cast<int>(t)];
}

std::optional<ModelTag> classify_h4hyp(const CylinderDiagram& d) {
    if (d.letter_count() != 5) return std::nullopt;
    auto mine = canonical(d).diagram;
    for (auto t : all_models())
        if (canonical(reference_diagram(t)).diagram == mine) return t;
    return std::nullopt;
}

PolygonSurface build_from_diagram(const CylinderDiagram& d, const DiagramParams& p) {
    d.check();
    const int m = d.letter_count();
    const int n = static_cast<int>(d.cylinders.size());
    if (static_cast<int>(p.lengths.size()) != m || static_cast<int>(p.heights.size()) != n ||
        static_cast<int>(p.twists.size()) != n)
        throw std::invalid_argument("parameter counts do not match the diagram");
    for (const auto& l : p.lengths)
        if (scalar_sign(l) <= 0) throw std::invalid_argument("saddle lengths must be positive");
    for (const auto& h : p.heights)
        if (scalar_sign(h) <= 0) throw std::invalid_argument("cylinder heights must be positive");
    long field = 1;
    auto note = [&](const Scalar& s) {
        if (s.field() != 1) field = s.field();
    };
    std::vector<std::vector<Vec2>> polys;
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    std::vector<EdgeRef> bottom_edge(m), top_edge(m);
    for (int c = 0; c < n; ++c) {
        const auto& cyl = d.cylinders[c];
        Scalar w = cylinder_width(cyl, p);
        Scalar wt(0);
        for (int x : cyl.top) wt += p.lengths[x];
        if (!(w == wt))
            throw std::invalid_argument("cylinder " + std::to_string(c + 1) + ": top length " + wt.to_string() +
                                        " differs from bottom length " + w.to_string());
        Scalar tw = mod_positive(p.twists[c], w);
        note(w);
        note(tw);
        note(p.heights[c]);
        std::vector<Vec2> poly;
        for (int x : cyl.bottom) {
            bottom_edge[x] = {c, static_cast<int>(poly.size())};
            poly.push_back({p.lengths[x], Scalar(0)});
        }
        int right = static_cast<int>(poly.size());
        poly.push_back({tw, p.heights[c]});
        for (auto it = cyl.top.rbegin(); it != cyl.top.rend(); ++it) {
            top_edge[*it] = {c, static_cast<int>(poly.size())};
            poly.push_back({-p.lengths[*it], Scalar(0)});
        }
        int left = static_cast<int>(poly.size());
        poly.push_back({-tw, -p.heights[c]});
        glue.push_back({{c, right}, {c, left}});
        polys.push_back(std::move(poly));
    }
    for (int x = 0; x < m; ++x) {
        note(p.lengths[x]);
        glue.push_back({bottom_edge[x], top_edge[x]});
    }
    PolygonSurface s(field, std::move(polys), std::move(glue));
    s.require_valid();
    return s;
}

InvolutionReport involution_check(const CylinderDiagram& d, const std::vector<Scalar>& lengths) {
    d.check();
    const int n = static_cast<int>(d.cylinders.size());
    const int m = d.letter_count();
    InvolutionReport rep;
    rep.expected_fixed = 8 - 1 - 2 * n;
    for (const auto& c : d.cylinders)
        if (c.top.size() != c.bottom.size()) return rep;
    std::vector<std::size_t> rot(n, 0);
    for (;;) {
        std::vector<int> iota(m, -1);
        for (int c = 0; c < n; ++c) {
            const auto& cyl = d.cylinders[c];
            std::size_t k = cyl.top.size();
            for (std::size_t j = 0; j < k; ++j) iota[cyl.top[j]] = cyl.bottom[(rot[c] + k - j) % k];
        }
        bool ok = true;
        for (int x = 0; x < m && ok; ++x) ok = iota[iota[x]] == x && lengths[iota[x]] == lengths[x];
        if (ok) {
            int fixed = 0;
            for (int x = 0; x < m; ++x) fixed += iota[x] == x;
            if (!rep.found || (fixed == rep.expected_fixed && rep.fixed_letters != rep.expected_fixed)) {
                rep.found = true;
                rep.involution = iota;
                rep.fixed_letters = fixed;
            }
        }
        int c = 0;
        while (c < n && ++rot[c] == d.cylinders[c].top.size()) rot[c++] = 0;
        if (c == n) break;
    }
    return rep;
}

InvolutionReport involution_check(const Decomposition& d) {
    auto [diag, p] = raw_diagram(d);
    return involution_check(diag, p.lengths);
}

}  // namespace flatdeck
