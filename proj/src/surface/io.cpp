#include "surface/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace flatdeck {

using nlohmann::json;

namespace {

json scalar_json(const Scalar& x) {
    if (x.is_rational()) return rational_to_string(x.rational_part());
    return json{{"a", rational_to_string(x.rational_part())}, {"b", rational_to_string(x.radical_part())}};
}

Rational rational_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SurfaceFormatError(where + ": " + e.what());
    }
    throw SurfaceFormatError(where + ": expected an integer or a \"p/q\" string");
}

Scalar scalar_from(const json& j, long d, const std::string& where) {
    if (j.is_object()) {
        if (!j.contains("a") || !j.contains("b")) throw SurfaceFormatError(where + ": scalar object needs \"a\" and \"b\"");
        Rational b = rational_json(j["b"], where);
        if (sgn(b) != 0 && d == 1) throw SurfaceFormatError(where + ": irrational scalar over the rationals");
        return Scalar(rational_json(j["a"], where), b, d);
    }
    return Scalar(rational_json(j, where));
}

int index_from(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SurfaceFormatError(where + ": expected an integer index");
    return j.get<int>();
}

}  // namespace

std::string surface_to_json(const PolygonSurface& s) {
    json polys = json::array();
    for (const auto& poly : s.polygons()) {
        json p = json::array();
        for (const auto& e : poly) p.push_back(json::array({scalar_json(e.x), scalar_json(e.y)}));
        polys.push_back(std::move(p));
    }
    json glue = json::array();
    for (const auto& [a, b] : s.gluings()) glue.push_back(json::array({json::array({a.poly, a.edge}), json::array({b.poly, b.edge})}));
    json doc;
    doc["format"] = kSurfaceFormat;
    doc["field"] = {{"d", s.field()}};
    doc["polygons"] = std::move(polys);
    doc["gluings"] = std::move(glue);
    return doc.dump(1) + "\n";
}

PolygonSurface surface_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SurfaceFormatError(std::string("not a JSON document: ") + e.what());
    }
    if (!doc.is_object()) throw SurfaceFormatError("surface document must be an object");
    if (doc.value("format", std::string()) != kSurfaceFormat)
        throw SurfaceFormatError(std::string("expected \"format\": \"") + kSurfaceFormat + "\"");
    long d = 1;
    if (doc.contains("field")) {
        const auto& f = doc["field"];
        if (!f.is_object() || !f.contains("d") || !f["d"].is_number_integer())
            throw SurfaceFormatError("field must be {\"d\": integer}");
        d = f["d"].get<long>();
    }
    if (d < 1 || !is_square_free(d)) throw SurfaceFormatError("field.d must be a square-free integer >= 1");
    if (!doc.contains("polygons") || !doc["polygons"].is_array()) throw SurfaceFormatError("missing polygons array");
    if (!doc.contains("gluings") || !doc["gluings"].is_array()) throw SurfaceFormatError("missing gluings array");
    std::vector<std::vector<Vec2>> polys;
    for (std::size_t p = 0; p < doc["polygons"].size(); ++p) {
        const auto& jp = doc["polygons"][p];
        if (!jp.is_array()) throw SurfaceFormatError("polygon " + std::to_string(p) + " must be an array of edge vectors");
        std::vector<Vec2> poly;
        for (std::size_t i = 0; i < jp.size(); ++i) {
            std::string where = "polygon " + std::to_string(p) + " edge " + std::to_string(i);
            const auto& je = jp[i];
            if (!je.is_array() || je.size() != 2) throw SurfaceFormatError(where + ": edge must be [x, y]");
            poly.push_back({scalar_from(je[0], d, where), scalar_from(je[1], d, where)});
        }
        polys.push_back(std::move(poly));
    }
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (std::size_t g = 0; g < doc["gluings"].size(); ++g) {
        std::string where = "gluing " + std::to_string(g);
        const auto& jg = doc["gluings"][g];
        if (!jg.is_array() || jg.size() != 2 || !jg[0].is_array() || !jg[1].is_array() || jg[0].size() != 2 ||
            jg[1].size() != 2)
            throw SurfaceFormatError(where + ": expected [[poly, edge], [poly, edge]]");
        glue.push_back({{index_from(jg[0][0], where), index_from(jg[0][1], where)},
                        {index_from(jg[1][0], where), index_from(jg[1][1], where)}});
    }
    return PolygonSurface(d, std::move(polys), std::move(glue));
}

PolygonSurface read_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return surface_from_json(buf.str());
}

void write_surface_file(const PolygonSurface& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    out << surface_to_json(s);
    if (!out) throw std::ios_base::failure("write failed for " + path);
}

}  // namespace flatdeck
