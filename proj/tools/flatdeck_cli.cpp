// flatdeck command line.  Links only the C API; reports are JSON on stdout.

#include "flatdeck/flatdeck.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 3;

struct SurfaceDeleter {
    void operator()(fd_surface* s) const { fd_surface_free(s); }
};
using Surface = std::unique_ptr<fd_surface, SurfaceDeleter>;

struct StringDeleter {
    void operator()(char* s) const { fd_string_free(s); }
};
using Owned = std::unique_ptr<char, StringDeleter>;

// Internal errors are reported as failures, not as a separate code.
int exit_code(fd_status st) { return st == FD_INTERNAL ? 1 : static_cast<int>(st); }

const char* status_name(fd_status st) {
    switch (st) {
        case FD_OK: return "ok";
        case FD_INVALID: return "invalid";
        case FD_INCONCLUSIVE: return "inconclusive";
        case FD_USAGE: return "usage";
        default: return "error";
    }
}

struct Direction {
    long p = 0, q = 0;
};

Direction parse_direction(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("direction", "expected P,Q, got \"" + text + "\"");
    Direction d;
    try {
        std::size_t a = 0, b = 0;
        d.p = std::stol(text.substr(0, comma), &a);
        d.q = std::stol(text.substr(comma + 1), &b);
        if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("direction", "expected integers P,Q, got \"" + text + "\"");
    }
    return d;
}

// Shared state of one invocation.
struct Run {
    std::string command;
    std::string file;
    std::string dir_text, against_text;
    std::string output;
    std::optional<std::string> budget;
    std::vector<int> cylinders, set;
    int single_cylinder = 0;
    std::string shear, stretch;
    int max_slope = 0;
    int jobs = 1;
    std::string corpus_name;
    std::optional<std::uint64_t> seed;

    const char* budget_arg() {
        if (budget) return budget->c_str();
        if (const char* env = std::getenv("FLATDECK_BUDGET"); env && *env) {
            budget = env;
            return budget->c_str();
        }
        return nullptr;
    }
};

int emit(const Run& run, fd_status st, const char* report, Json extra = Json::object()) {
    Json out;
    out["command"] = run.command;
    out["exit_status"] = status_name(st);
    if (report) {
        Json body = Json::parse(report);
        for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    }
    for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
    if (st != FD_OK && !out.contains("error") && *fd_last_error()) out["error"] = fd_last_error();
    std::cout << out.dump(2) << "\n";
    if (st != FD_OK && *fd_last_error()) std::cerr << "flatdeck " << run.command << ": " << fd_last_error() << "\n";
    return exit_code(st);
}

int fail(const Run& run, fd_status st) { return emit(run, st, nullptr); }

// Owns and frees whatever report the call hands back.
template <class Call>
int with_report(const Run& run, Call&& call) {
    char* raw = nullptr;
    fd_status st = call(&raw);
    Owned r(raw);
    return emit(run, st, r.get());
}

int execute(Run& run) {
    if (run.command == "corpus") {
        fd_surface* raw = nullptr;
        fd_status st = fd_corpus_surface(run.corpus_name.c_str(), run.seed.has_value(), run.seed.value_or(0), &raw);
        if (st != FD_OK) return fail(run, st);
        Surface s(raw);
        if ((st = fd_surface_write(s.get(), run.output.c_str())) != FD_OK) return fail(run, st);
        Json extra{{"name", run.corpus_name}, {"output", run.output}};
        if (run.seed) extra["seed"] = *run.seed;
        return emit(run, FD_OK, nullptr, extra);
    }

    fd_surface* raw = nullptr;
    fd_status st = fd_surface_read(run.file.c_str(), &raw);
    if (st != FD_OK) return fail(run, st);
    Surface s(raw);
    Direction dir = run.dir_text.empty() ? Direction{} : parse_direction(run.dir_text);

    fd_surface* sp = s.get();
    const char* budget = run.budget_arg();

    if (run.command == "validate") return with_report(run, [&](char** r) { return fd_validate(sp, r); });
    if (run.command == "info") return with_report(run, [&](char** r) { return fd_info(sp, r); });
    if (run.command == "homology") return with_report(run, [&](char** r) { return fd_homology(sp, r); });
    if (run.command == "decompose")
        return with_report(run, [&](char** r) { return fd_decompose(sp, dir.p, dir.q, budget, r); });
    if (run.command == "classify")
        return with_report(run, [&](char** r) { return fd_classify(sp, dir.p, dir.q, budget, r); });
    if (run.command == "scan")
        return with_report(run, [&](char** r) { return fd_scan(sp, run.max_slope, run.jobs, budget, r); });
    if (run.command == "portion") {
        Direction other = parse_direction(run.against_text);
        return with_report(run, [&](char** r) {
            return fd_portion(sp, dir.p, dir.q, run.single_cylinder, other.p, other.q, run.set.data(), run.set.size(),
                              budget, r);
        });
    }
    if (run.command == "deform") {
        fd_surface* out_raw = nullptr;
        st = fd_deform(sp, dir.p, dir.q, run.cylinders.data(), run.cylinders.size(),
                       run.shear.empty() ? nullptr : run.shear.c_str(),
                       run.stretch.empty() ? nullptr : run.stretch.c_str(), budget, &out_raw);
        if (st != FD_OK) return fail(run, st);
        Surface out(out_raw);
        if ((st = fd_surface_write(out.get(), run.output.c_str())) != FD_OK) return fail(run, st);
        Json extra{{"direction", std::to_string(dir.p) + "," + std::to_string(dir.q)},
                   {"cylinders", run.cylinders},
                   {"shear", run.shear.empty() ? "0" : run.shear},
                   {"stretch", run.stretch.empty() ? "1" : run.stretch},
                   {"output", run.output}};
        return emit(run, FD_OK, nullptr, extra);
    }
    if (run.command == "render") {
        char* text = nullptr;
        st = fd_render_svg(sp, dir.p, dir.q, budget, &text);
        if (st != FD_OK) return fail(run, st);
        Owned svg(text);
        std::ofstream f(run.output);
        f << svg.get();
        if (!f) {
            std::cerr << "flatdeck render: cannot write " << run.output << "\n";
            return kExitUsage;
        }
        return emit(run, FD_OK, nullptr, Json{{"output", run.output}});
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flatdeck: exact cylinder decompositions of translation surfaces in H(4)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(fd_version()));
    Run run;

    auto surface_cmd = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("FILE", run.file, "surface file (flatdeck-surface/1)")->required();
        return c;
    };
    auto add_dir = [&](CLI::App* c) { c->add_option("--dir", run.dir_text, "direction P,Q")->required(); };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", run.budget, "trace length budget (rational); default FLATDECK_BUDGET or 1000 x longest edge");
    };

    surface_cmd("validate", "check the surface invariants");
    surface_cmd("info", "stratum, genus, area, period rank");
    surface_cmd("homology", "relative homology basis and periods");

    auto* dec = surface_cmd("decompose", "cylinder decomposition in a direction");
    add_dir(dec);
    add_budget(dec);

    auto* cls = surface_cmd("classify", "cylinder diagram and its H^hyp(4) model");
    add_dir(cls);
    add_budget(cls);

    auto* scn = surface_cmd("scan", "decompose every primitive direction up to a slope bound");
    scn->add_option("--max-slope", run.max_slope, "bound on |p| and |q|")->required()->check(CLI::PositiveNumber);
    scn->add_option("--jobs", run.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_budget(scn);

    auto* dfm = surface_cmd("deform", "shear and stretch cylinders of a direction");
    add_dir(dfm);
    dfm->add_option("--cyl", run.cylinders, "1-based cylinder indices")->required()->delimiter(',')->check(CLI::PositiveNumber);
    dfm->add_option("--shear", run.shear, "shear t (rational)");
    dfm->add_option("--stretch", run.stretch, "height factor s > 0 (rational)");
    dfm->add_option("-o,--output", run.output, "output surface file")->required();
    add_budget(dfm);

    auto* por = surface_cmd("portion", "area portion of a cylinder covered by transverse cylinders");
    add_dir(por);
    por->add_option("--cyl", run.single_cylinder, "1-based cylinder index")->required()->check(CLI::PositiveNumber);
    por->add_option("--against", run.against_text, "transverse direction P2,Q2")->required();
    por->add_option("--set", run.set, "1-based indices in the transverse direction")->required()->delimiter(',')
        ->check(CLI::PositiveNumber);
    add_budget(por);

    auto* cor = app.add_subcommand("corpus", "write a named scenario surface");
    cor->add_option("NAME", run.corpus_name, "scenario name")->required();
    cor->add_option("--seed", run.seed, "draw random parameters from this seed");
    cor->add_option("-o,--output", run.output, "output surface file")->required();

    auto* ren = surface_cmd("render", "SVG picture of the cylinders of a direction");
    add_dir(ren);
    ren->add_option("-o,--output", run.output, "output SVG file")->required();
    add_budget(ren);

    try {
        app.parse(argc, argv);
        run.command = app.get_subcommands().front()->get_name();
        if (!run.dir_text.empty()) parse_direction(run.dir_text);
        if (!run.against_text.empty()) parse_direction(run.against_text);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    try {
        return execute(run);
    } catch (const std::exception& e) {
        std::cerr << "flatdeck: " << e.what() << "\n";
        return 1;
    }
}
