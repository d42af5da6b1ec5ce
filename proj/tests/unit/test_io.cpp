#include <doctest.h>

#include "corpus/basic.hpp"
#include "surface/io.hpp"

using namespace flatdeck;

TEST_CASE("surface documents round trip") {
    for (const auto& s : {unit_torus(), s1_surface(), regular_12gon()}) {
        auto back = surface_from_json(surface_to_json(s));
        CHECK(back.field() == s.field());
        CHECK(back.polygons() == s.polygons());
        CHECK(back.gluings() == s.gluings());
    }
    CHECK(surface_to_json(regular_12gon()).find("\"b\"") != std::string::npos);
}

TEST_CASE("hand written document") {
    auto s = surface_from_json(R"({"format": "flatdeck-surface/1", "field": {"d": 1},
        "polygons": [[["1", 0], [0, "1/1"], [-1, 0], [0, "-1"]]],
        "gluings": [[[0, 0], [0, 2]], [[0, 1], [0, 3]]]})");
    CHECK(validate(s).ok());
    CHECK(area(s) == Scalar(1));
    // a structurally readable but invalid surface is left to validate()
    auto bad = surface_from_json(R"({"format": "flatdeck-surface/1", "polygons": [[[1, 0], [0, 1], [-1, 0], [0, -1]]],
        "gluings": [[[0, 0], [0, 1]]]})");
    CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(surface_from_json("{"), SurfaceFormatError);
    CHECK_THROWS_AS(surface_from_json(R"({"format": "other", "polygons": [], "gluings": []})"), SurfaceFormatError);
    CHECK_THROWS_AS(surface_from_json(R"({"format": "flatdeck-surface/1", "gluings": []})"), SurfaceFormatError);
    CHECK_THROWS_AS(surface_from_json(R"({"format": "flatdeck-surface/1", "field": {"d": 4}, "polygons": [], "gluings": []})"),
                    SurfaceFormatError);
    CHECK_THROWS_AS(surface_from_json(R"({"format": "flatdeck-surface/1", "polygons": [[["x", 0]]], "gluings": []})"),
                    SurfaceFormatError);
    CHECK_THROWS_AS(surface_from_json(R"({"format": "flatdeck-surface/1", "polygons": [[[{"a": 1, "b": 1}, 0]]], "gluings": []})"),
                    SurfaceFormatError);
    CHECK_THROWS_AS(read_surface_file("/nonexistent/surface.json"), std::ios_base::failure);
}
