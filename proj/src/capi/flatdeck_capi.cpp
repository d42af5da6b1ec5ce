#include "flatdeck/flatdeck.h"

#include "corpus/scenarios.hpp"
#include "report/report.hpp"
#include "surface/io.hpp"

#include <cstdlib>
#include <cstring>
#include <ios>
#include <string>

using namespace flatdeck;

struct fd_surface {
    PolygonSurface s;
};

namespace {

thread_local std::string g_error;

fd_status fail(fd_status st, std::string msg) {
    g_error = std::move(msg);
    return st;
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

// Exceptions to status codes; the order matters (InvalidSurface is an
// invalid_argument).
template <class F>
fd_status guarded(F&& f) {
    g_error.clear();
    try {
        return f();
    } catch (const InvalidSurface& e) {
        return fail(FD_INVALID, e.what());
    } catch (const SurfaceFormatError& e) {
        return fail(FD_INVALID, e.what());
    } catch (const NotCertified& e) {
        return fail(e.inconclusive() ? FD_INCONCLUSIVE : FD_INVALID, e.what());
    } catch (const ConstructionError& e) {
        return fail(FD_INVALID, e.what());
    } catch (const std::ios_base::failure& e) {
        return fail(FD_USAGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FD_USAGE, e.what());
    } catch (const std::out_of_range& e) {
        return fail(FD_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(FD_INTERNAL, std::string("internal error: ") + e.what());
    } catch (...) {
        return fail(FD_INTERNAL, "internal error");
    }
}

Budget budget_of(const PolygonSurface& s, const char* text) {
    if (!text) return Budget::default_for(s);
    Rational r = parse_rational(text);
    if (sgn(r) <= 0) throw std::invalid_argument("budget must be positive");
    return Budget::length(Scalar(r));
}

Scalar scalar_arg(const char* text, long fallback, const char* what) {
    if (!text) return Scalar(fallback);
    try {
        return Scalar(parse_rational(text));
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " \"" + text + "\"");
    }
}

std::vector<int> zero_based(const int* v, std::size_t n) {
    if (n && !v) throw std::invalid_argument("null index list");
    std::vector<int> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] < 1) throw std::out_of_range("cylinder indices start at 1");
        out.push_back(v[i] - 1);
    }
    return out;
}

fd_status need(const void* p, const char* what) {
    return p ? FD_OK : fail(FD_USAGE, std::string("null ") + what);
}

fd_status hand_out(const Json& j, char** out, fd_status st = FD_OK) {
    *out = dup(j.dump(2) + "\n");
    return st;
}

void check_valid(const PolygonSurface& s) {
    auto r = validate(s);
    if (!r.ok()) throw InvalidSurface(r);
}

}  // namespace

extern "C" {

const char* fd_version(void) { return "1.0.0"; }

const char* fd_last_error(void) { return g_error.c_str(); }

void fd_string_free(char* s) { std::free(s); }

void fd_surface_free(fd_surface* s) { delete s; }

fd_status fd_surface_from_json(const char* text, fd_surface** out) {
    if (!text || !out) return need(nullptr, "argument");
    return guarded([&] {
        *out = new fd_surface{surface_from_json(text)};
        return FD_OK;
    });
}

fd_status fd_surface_read(const char* path, fd_surface** out) {
    if (!path || !out) return need(nullptr, "argument");
    return guarded([&] {
        *out = new fd_surface{read_surface_file(path)};
        return FD_OK;
    });
}

fd_status fd_surface_write(const fd_surface* s, const char* path) {
    if (!s || !path) return need(nullptr, "argument");
    return guarded([&] {
        write_surface_file(s->s, path);
        return FD_OK;
    });
}

fd_status fd_surface_to_json(const fd_surface* s, char** out) {
    if (!s || !out) return need(nullptr, "argument");
    return guarded([&] {
        *out = dup(surface_to_json(s->s));
        return FD_OK;
    });
}

fd_status fd_corpus_surface(const char* name, int has_seed, uint64_t seed, fd_surface** out) {
    if (!name || !out) return need(nullptr, "argument");
    return guarded([&] {
        std::optional<std::uint64_t> sd;
        if (has_seed) sd = seed;
        *out = new fd_surface{corpus_surface(name, sd)};
        return FD_OK;
    });
}

fd_status fd_corpus_names(char** out) {
    if (!out) return need(nullptr, "argument");
    return guarded([&] {
        Json j = Json::array();
        for (const auto& n : corpus_names()) j.push_back(n);
        return hand_out(j, out);
    });
}

fd_status fd_validate(const fd_surface* s, char** report) {
    if (!s || !report) return need(nullptr, "argument");
    return guarded([&] {
        auto r = validate(s->s);
        if (!r.ok()) g_error = "surface is invalid: " + r.violations.front().message;
        return hand_out(validation_report(r), report, r.ok() ? FD_OK : FD_INVALID);
    });
}

fd_status fd_info(const fd_surface* s, char** report) {
    if (!s || !report) return need(nullptr, "argument");
    return guarded([&] {
        check_valid(s->s);
        return hand_out(info_report(s->s), report);
    });
}

fd_status fd_homology(const fd_surface* s, char** report) {
    if (!s || !report) return need(nullptr, "argument");
    return guarded([&] {
        check_valid(s->s);
        return hand_out(homology_report(s->s), report);
    });
}

fd_status fd_decompose(const fd_surface* s, long p, long q, const char* budget, char** report) {
    if (!s || !report) return need(nullptr, "argument");
    return guarded([&] {
        check_valid(s->s);
        auto r = decompose(s->s, Direction::integer(p, q), budget_of(s->s, budget));
        bool inc = std::holds_alternative<Inconclusive>(r);
        if (inc) g_error = std::get<Inconclusive>(r).reason;
        return hand_out(decompose_report(r), report, inc ? FD_INCONCLUSIVE : FD_OK);
    });
}

fd_status fd_classify(const fd_surface* s, long p, long q, const char* budget, char** report) {
    if (!s || !report) return need(nullptr, "argument");
    return guarded([&] {
        check_valid(s->s);
        auto r = decompose(s->s, Direction::integer(p, q), budget_of(s->s, budget));
        bool inc = std::holds_alternative<Inconclusive>(r);
        if (inc) g_error = std::get<Inconclusive>(r).reason;
        return hand_out(classify_report(r), report, inc ? FD_INCONCLUSIVE : FD_OK);
    });
}

fd_status fd_scan(const fd_surface* s, int max_slope, int jobs, const char* budget, char** report) {
    if (!s || !report) return need(nullptr, "argument");
    return guarded([&] {
        check_valid(s->s);
        if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
        auto r = scan(s->s, max_slope, budget_of(s->s, budget), jobs);
        bool inc = !r.inconclusive.empty();
        if (inc) g_error = std::to_string(r.inconclusive.size()) + " direction(s) inconclusive";
        return hand_out(scan_report(r, max_slope), report, inc ? FD_INCONCLUSIVE : FD_OK);
    });
}

fd_status fd_deform(const fd_surface* s, long p, long q, const int* cylinders, size_t count, const char* shear,
                    const char* stretch, const char* budget, fd_surface** out) {
    if (!s || !out) return need(nullptr, "argument");
    return guarded([&] {
        check_valid(s->s);
        DeformationSpec spec;
        spec.direction = Direction::integer(p, q);
        spec.cylinders = zero_based(cylinders, count);
        spec.shear = scalar_arg(shear, 0, "shear");
        spec.stretch = scalar_arg(stretch, 1, "stretch");
        *out = new fd_surface{cylinder_deform(s->s, spec, budget_of(s->s, budget))};
        return FD_OK;
    });
}

fd_status fd_portion(const fd_surface* s, long p, long q, int cylinder, long p2, long q2, const int* set,
                     size_t count, const char* budget, char** report) {
    if (!s || !report) return need(nullptr, "argument");
    return guarded([&] {
        check_valid(s->s);
        if (cylinder < 1) throw std::out_of_range("cylinder indices start at 1");
        Direction d1 = Direction::integer(p, q), d2 = Direction::integer(p2, q2);
        auto coll = zero_based(set, count);
        Scalar v = portion(s->s, d1, cylinder - 1, d2, coll, budget_of(s->s, budget));
        Json j;
        j["direction"] = d1.to_string();
        j["cylinder"] = cylinder;
        j["against"] = d2.to_string();
        Json set_json = Json::array();
        for (int c : coll) set_json.push_back(c + 1);
        j["set"] = std::move(set_json);
        j["portion"] = scalar_text(v);
        return hand_out(j, report);
    });
}

fd_status fd_render_svg(const fd_surface* s, long p, long q, const char* budget, char** svg) {
    if (!s || !svg) return need(nullptr, "argument");
    return guarded([&] {
        check_valid(s->s);
        auto d = require_periodic(s->s, Direction::integer(p, q), budget_of(s->s, budget));
        *svg = dup(render_svg(d));
        return FD_OK;
    });
}

}  // extern "C"
