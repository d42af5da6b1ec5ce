#include "report/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace flatdeck {

std::string scalar_text(const Scalar& x) { return x.to_string(); }

Json vec_json(const Vec2& v) { return Json::array({scalar_text(v.x), scalar_text(v.y)}); }

Json validation_report(const ValidationReport& r) {
    Json out;
    out["valid"] = r.ok();
    Json vs = Json::array();
    for (const auto& v : r.violations) {
        Json j;
        j["kind"] = v.kind;
        if (v.polygon >= 0) j["polygon"] = v.polygon;
        if (v.edge >= 0) j["edge"] = v.edge;
        j["message"] = v.message;
        vs.push_back(std::move(j));
    }
    out["violations"] = std::move(vs);
    return out;
}

Json info_report(const PolygonSurface& s) {
    auto sig = stratum(s);
    Json out;
    out["stratum"] = sig.to_string();
    out["genus"] = sig.genus;
    out["zero_orders"] = sig.zero_orders;
    out["marked_points"] = sig.marked_points;
    out["field_d"] = s.field();
    out["polygons"] = s.polygon_count();
    out["area"] = scalar_text(area(s));
    out["period_rank"] = Homology(s).rank();
    return out;
}

namespace {

Json one_based(const std::vector<int>& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

}  // namespace

Json decomposition_report(const Decomposition& d) {
    auto lab = diagram_of(d);
    Json out;
    out["direction"] = d.direction.to_string();
    out["cylinder_count"] = d.cylinders.size();
    out["saddle_connection_count"] = d.saddles.size();
    Scalar total(0);
    Json cyls = Json::array();
    for (std::size_t i = 0; i < d.cylinders.size(); ++i) {
        const auto& c = d.cylinders[i];
        Json j;
        j["index"] = i + 1;
        j["width"] = scalar_text(c.width);
        j["height"] = scalar_text(c.height);
        j["twist"] = scalar_text(c.twist);
        j["area"] = scalar_text(c.area());
        j["circumference_squared"] = scalar_text(norm2(c.core_holonomy));
        j["modulus"] = scalar_text(c.area() / norm2(c.core_holonomy));
        j["core_holonomy"] = vec_json(c.core_holonomy);
        j["simple"] = c.simple();
        j["top"] = one_based(c.top);
        j["bottom"] = one_based(c.bottom);
        cyls.push_back(std::move(j));
        total += c.area();
    }
    out["area"] = scalar_text(total);
    out["cylinders"] = std::move(cyls);
    Json sads = Json::array();
    for (std::size_t k = 0; k < d.saddles.size(); ++k) {
        Json j;
        j["id"] = k + 1;
        j["letter"] = lab.letter_map[k] + 1;
        j["holonomy"] = vec_json(d.holonomy(static_cast<int>(k)));
        j["frame_length"] = scalar_text(d.lengths[k]);
        sads.push_back(std::move(j));
    }
    out["saddle_connections"] = std::move(sads);
    Json adj = Json::array();
    for (auto [a, b] : d.adjacency) adj.push_back(Json::array({a + 1, b + 1}));
    out["adjacency"] = std::move(adj);
    out["diagram"] = lab.diagram.to_text();
    return out;
}

Json decompose_report(const DecomposeResult& r) {
    Json out;
    if (const auto* d = std::get_if<Decomposition>(&r)) {
        out["status"] = "periodic";
        out.update(decomposition_report(*d));
    } else if (const auto* np = std::get_if<NotPeriodic>(&r)) {
        out["status"] = "not_periodic";
        out["direction"] = np->direction.to_string();
        out["reason"] = np->reason;
    } else {
        const auto& inc = std::get<Inconclusive>(r);
        out["status"] = "inconclusive";
        out["direction"] = inc.direction.to_string();
        out["reason"] = inc.reason;
        out["budget_squared"] = scalar_text(inc.traced_length_sq);
    }
    return out;
}

Json classify_report(const DecomposeResult& r) {
    const auto* d = std::get_if<Decomposition>(&r);
    if (!d) return decompose_report(r);
    auto lab = diagram_of(*d);
    auto model = classify_h4hyp(lab.diagram);
    auto inv = involution_check(*d);
    Json out;
    out["status"] = "periodic";
    out["direction"] = d->direction.to_string();
    out["cylinder_count"] = d->cylinders.size();
    out["saddle_connection_count"] = d->saddles.size();
    out["model"] = model ? model_name(*model) : "Unrecognized";
    out["diagram"] = lab.diagram.to_text();
    Json ij;
    ij["found"] = inv.found;
    ij["fixed_letters"] = inv.fixed_letters;
    ij["expected_fixed"] = inv.expected_fixed;
    ij["passes"] = inv.passes();
    if (inv.found) ij["map"] = one_based(inv.involution);
    out["involution"] = std::move(ij);
    return out;
}

Json scan_report(const ScanResult& r, int bound) {
    Json out;
    out["max_slope"] = bound;
    Json per = Json::array();
    std::size_t max_cyl = 0;
    for (const auto& e : r.periodic) {
        auto lab = diagram_of(e.decomposition);
        auto model = classify_h4hyp(lab.diagram);
        Json j;
        j["direction"] = e.direction.to_string();
        j["cylinders"] = e.decomposition.cylinders.size();
        j["saddle_connections"] = e.decomposition.saddles.size();
        j["model"] = model ? model_name(*model) : "Unrecognized";
        max_cyl = std::max(max_cyl, e.decomposition.cylinders.size());
        per.push_back(std::move(j));
    }
    out["periodic_count"] = r.periodic.size();
    out["max_cylinders"] = max_cyl;
    out["periodic"] = std::move(per);
    Json np = Json::array(), inc = Json::array();
    for (const auto& d : r.not_periodic) np.push_back(d.to_string());
    for (const auto& d : r.inconclusive) inc.push_back(d.to_string());
    out["not_periodic"] = std::move(np);
    out["inconclusive"] = std::move(inc);
    return out;
}

Json homology_report(const PolygonSurface& s) {
    Homology h(s);
    auto sig = stratum(s);
    Json out;
    out["rank"] = h.rank();
    out["genus"] = sig.genus;
    out["vertex_classes"] = h.topology().classes().size();
    out["basis_edges"] = h.basis_edges();
    Json per = Json::array();
    for (const auto& v : h.periods()) per.push_back(vec_json(v));
    out["periods"] = std::move(per);
    return out;
}

std::string render_svg(const Decomposition& d) {
    auto lab = diagram_of(d);
    Scalar max_w(0), total_h(0);
    for (const auto& c : d.cylinders) {
        if (c.width > max_w) max_w = c.width;
        total_h += c.height;
    }
    const double margin = 30, gap = 40, avail = 740;
    const double scale = avail / max_w.to_double();
    const double height = 2 * margin + scale * total_h.to_double() + gap * static_cast<double>(d.cylinders.size());
    std::ostringstream os;
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"" << num(height) << "\">\n"
       << "<title>direction " << d.direction.to_string() << "</title>\n";
    double y = margin;
    // topmost cylinder drawn first: reverse decomposition order
    for (std::size_t n = d.cylinders.size(); n-- > 0;) {
        const auto& c = d.cylinders[n];
        double w = scale * c.width.to_double(), h = scale * c.height.to_double();
        double y_top = y + 16, y_bot = y_top + h;
        os << "<rect x=\"" << num(margin) << "\" y=\"" << num(y_top) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
           << "\" fill=\"#dde8f4\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(margin + w / 2) << "\" y=\"" << num(y_top + h / 2) << "\" font-size=\"12\" text-anchor=\"middle\">C"
           << n + 1 << "</text>\n";
        auto word = [&](const std::vector<int>& letters, const Scalar& start, double yy, double dy) {
            double x0 = c.width.to_double() > 0 ? std::fmod(start.to_double(), c.width.to_double()) : 0;
            for (int s : letters) {
                double len = d.lengths[s].to_double();
                double mid = std::fmod(x0 + len / 2, c.width.to_double());
                os << "<line x1=\"" << num(margin + scale * x0) << "\" y1=\"" << num(yy - 4) << "\" x2=\""
                   << num(margin + scale * x0) << "\" y2=\"" << num(yy + 4) << "\" stroke=\"black\"/>\n";
                os << "<text x=\"" << num(margin + scale * mid) << "\" y=\"" << num(yy + dy)
                   << "\" font-size=\"11\" text-anchor=\"middle\">" << lab.letter_map[s] + 1 << "</text>\n";
                x0 = std::fmod(x0 + len, c.width.to_double());
            }
        };
        word(c.top, c.twist, y_top, -4);
        word(c.bottom, Scalar(0), y_bot, 13);
        y = y_bot + gap - 16;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace flatdeck
