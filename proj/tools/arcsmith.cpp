// arcsmith: jet equations, fiber specialization, finite-field point counts,
// resolution dual-graph calculus and wedge experiments for algebroid surface
// singularities presented over a coefficient ring.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arcsmith/condition_no.hpp"
#include "arcsmith/count.hpp"
#include "arcsmith/errors.hpp"
#include "arcsmith/intersect.hpp"
#include "arcsmith/parse.hpp"
#include "arcsmith/report.hpp"
#include "arcsmith/serialize.hpp"
#include "arcsmith/surface_def.hpp"

using nlohmann::json;
using namespace arcsmith;

namespace {

std::uint64_t default_limit() {
    if (const char* env = std::getenv("ARCSMITH_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed ARCSMITH_LIMIT='" << env << "'\n";
    }
    return CountOptions{}.exhaustive_limit;
}

void emit(const json& doc, const std::optional<std::string>& out_path) {
    if (out_path) {
        write_report(doc, *out_path);
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

struct JetArgs {
    std::string def_path;
    std::size_t level = 2;
    std::optional<std::string> out;
};

int cmd_jet(const JetArgs& args) {
    SurfaceDefinition def = load_surface_definition(args.def_path);
    NiceTriplePresentation tri = def.triple();
    JetSystem js = generate_jet_system(tri, args.level);
    json doc = jet_system_to_json(js);

    auto names = js.variable_names();
    std::printf("jet system of %s at level %zu over %s\n", def.name.c_str(),
                args.level, js.ring().description().c_str());
    for (std::size_t j = 0; j < js.relation_count(); ++j)
        for (std::size_t q = 1; q <= js.level(); ++q)
            std::printf("  F_%zu,%zu = %s\n", j + 1, q,
                        js.equation(j, q).str(names).c_str());
    emit(doc, args.out);
    return 0;
}

struct FiberArgs {
    std::string def_path;
    std::string at = "special";
    std::optional<std::size_t> level;
    std::optional<std::string> out;
};

int cmd_fiber(const FiberArgs& args) {
    SurfaceDefinition def = load_surface_definition(args.def_path);
    NiceTriplePresentation tri = def.triple();
    FiberPoint which;
    if (args.at == "special") which = FiberPoint::special;
    else if (args.at == "generic") which = FiberPoint::generic;
    else throw ConfigError("--at must be 'special' or 'generic'");

    NiceTriplePresentation fib = fiber_at(tri, which);
    auto names = fib.variable_names();
    json relations = json::array();
    for (const auto& f : fib.relations()) relations.push_back(f.str(names));
    json doc{{"name", def.name},
             {"at", args.at},
             {"ring", fib.ring().description()},
             {"relations", relations}};
    std::printf("%s fiber of %s over %s\n", args.at.c_str(), def.name.c_str(),
                fib.ring().description().c_str());
    for (const auto& f : fib.relations())
        std::printf("  %s = 0\n", f.str(names).c_str());
    if (args.level) doc["jet"] = jet_system_to_json(generate_jet_system(fib, *args.level));
    emit(doc, args.out);
    return 0;
}

struct CountArgs {
    std::string def_path;
    std::size_t level = 2;
    std::uint64_t q = 2;
    std::optional<std::uint64_t> sample;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> limit;
    std::optional<std::string> out;
};

int cmd_count(const CountArgs& args) {
    SurfaceDefinition def = load_surface_definition(args.def_path);
    NiceTriplePresentation tri = def.triple();
    CoefficientRing fq = CoefficientRing::prime_field(args.q);
    NiceTriplePresentation reduced = base_change(tri, fq);
    JetSystem js = generate_jet_system(reduced, args.level);

    CountOptions opts;
    opts.exhaustive_limit = args.limit.value_or(default_limit());

    CountResult r;
    if (args.sample) {
        if (!args.seed && !def.params.seed)
            throw ConfigError("sampled counting needs --seed (reproducibility)");
        r = count_points_sampled(js, *args.sample,
                                 args.seed ? *args.seed : *def.params.seed, opts);
        std::printf("N(q=%llu, m=%zu) ~ %.1f  (hits %llu / %llu samples, 95%% ci "
                    "[%.1f, %.1f])\n",
                    static_cast<unsigned long long>(args.q), args.level, r.estimate,
                    static_cast<unsigned long long>(r.hits),
                    static_cast<unsigned long long>(r.samples), r.ci_low, r.ci_high);
    } else {
        r = count_points(js, opts);
        std::printf("N(q=%llu, m=%zu) = %llu  (grid %s)\n",
                    static_cast<unsigned long long>(args.q), args.level,
                    static_cast<unsigned long long>(r.count),
                    r.grid_size.get_str().c_str());
    }
    json doc{{"name", def.name}, {"q", args.q}, {"m", args.level},
             {"count", count_to_json(r)}};
    emit(doc, args.out);
    return 0;
}

struct GraphArgs {
    std::string g1_path, g2_path;
    std::optional<std::string> out;
};

DualGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    json doc = json::parse(in);
    DualGraph g = graph_from_json(doc);
    if (!g.is_connected())
        throw ConfigError(path + ": exceptional configurations must be connected");
    if (!is_negative_definite(intersection_matrix(g)))
        throw ConfigError(path + ": intersection matrix is not negative definite");
    return g;
}

int cmd_graph_minimal(const GraphArgs& args) {
    DualGraph g = load_graph(args.g1_path);
    MinimalModelResult mm = minimal_model(g);
    json doc{{"minimal_model", graph_to_json(mm.graph)},
             {"essential", std::vector<std::int64_t>(mm.essential.begin(),
                                                     mm.essential.end())},
             {"N_r", mm.graph.size()}};
    std::printf("minimal model has %zu curves; essential:", mm.graph.size());
    for (auto id : mm.essential) std::printf(" %lld", static_cast<long long>(id));
    std::printf("\n");
    emit(doc, args.out);
    return 0;
}

int cmd_graph_nr(const GraphArgs& args) {
    DualGraph g = load_graph(args.g1_path);
    std::size_t nr = count_nr(g);
    std::printf("N_r = %zu\n", nr);
    emit(json{{"N_r", nr}}, args.out);
    return 0;
}

int cmd_graph_goodness(const GraphArgs& args) {
    std::ifstream in(args.g1_path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + args.g1_path);
    json doc = json::parse(in);
    DualGraph g = graph_from_json(doc);
    if (!doc.contains("points"))
        throw ConfigError(args.g1_path + " carries no point data");
    auto points = points_from_json(doc.at("points"));
    Goodness verdict = check_goodness(g, points);
    const char* text = verdict == Goodness::very_good ? "very_good"
                       : verdict == Goodness::good    ? "good"
                                                      : "neither";
    std::printf("resolution data is %s\n", text);
    emit(json{{"goodness", text}}, args.out);
    return 0;
}

int cmd_graph_match(const GraphArgs& args) {
    DualGraph g1 = load_graph(args.g1_path);
    DualGraph g2 = load_graph(args.g2_path);
    FamilyInvarianceReport r = family_invariance_check(g1, g2);
    if (r.matched) {
        std::printf("matched: N_r = %zu = %zu\n", r.nr_special, r.nr_generic);
    } else {
        std::printf("no match: %s (N_r %zu vs %zu)\n", r.mismatch_reason.c_str(),
                    r.nr_special, r.nr_generic);
    }
    emit(family_report_to_json(r), args.out);
    return r.matched ? 0 : 3;
}

struct IntersectArgs {
    std::string f, g, field = "QQ";
    std::size_t cap = 16;
    std::optional<std::string> out;
};

int cmd_intersect(const IntersectArgs& args) {
    CoefficientRing field = CoefficientRing::parse(args.field);
    const std::vector<std::string> xy{"x", "y"};
    LocalPair pair{field, parse_polynomial(args.f, field, xy),
                   parse_polynomial(args.g, field, xy)};
    MultiplicityResult r = local_intersection_multiplicity(pair, args.cap);
    if (r.isolated)
        std::printf("multiplicity = %zu (stabilized at d=%zu)\n", r.multiplicity,
                    r.stabilized_at);
    else
        std::printf("not isolated within cap %zu (shared branch through the "
                    "origin)\n", args.cap);
    emit(multiplicity_to_json(r), args.out);
    return 0;
}

struct WedgeArgs {
    std::string def_path, arc, frame;
    std::string field = "QQ";
    std::size_t prec = 8;
    std::optional<std::string> out;
};

int cmd_wedge(const WedgeArgs& args) {
    SurfaceDefinition def = load_surface_definition(args.def_path);
    const ChartFrame& frame = def.frame(args.frame);
    CoefficientRing field = CoefficientRing::parse(args.field);
    auto comps = parse_series_list(args.arc, field, "t", args.prec);
    Arc arc(field, args.prec, std::move(comps));
    Wedge w = wedge_from_arc(arc, frame);
    GenericFiberWitness witness = generic_fiber_witness(w);
    Arc back = specialize_at_zero(w);

    std::printf("wedge in frame '%s':", frame.name.c_str());
    for (const auto& c : w.components()) std::printf(" %s,", c.str().c_str());
    std::printf("\n  u=0 specialization restores the arc: %s\n",
                back == arc ? "yes" : "NO");
    std::printf("  generic-fiber witness: %s\n",
                witness.in_generic_fiber ? witness.lowest_term.c_str() : "none");

    json doc{{"frame", frame.name},
             {"arc", arc_to_json(arc)},
             {"wedge", wedge_to_json(w)},
             {"witness", witness.in_generic_fiber ? json(witness.lowest_term)
                                                  : json(nullptr)},
             {"roundtrip_ok", back == arc}};
    emit(doc, args.out);
    return 0;
}

struct RunArgs {
    std::string def_path;
    std::string tasks;
    std::optional<std::uint64_t> limit;
    std::optional<std::string> out;
};

int cmd_run(const RunArgs& args) {
    SurfaceDefinition def = load_surface_definition(args.def_path);
    std::vector<Task> tasks = parse_tasks(args.tasks);
    CountOptions opts;
    opts.exhaustive_limit =
        args.limit.value_or(def.params.count_limit.value_or(default_limit()));
    PipelineResult result = run_pipeline(def, tasks, opts);
    if (args.out) {
        write_report(result.report, *args.out);
        std::printf("report written to %s\n", args.out->c_str());
    } else {
        std::cout << report_to_bytes(result.report);
    }
    if (!result.certifications_ok) {
        std::fprintf(stderr, "internal certification FAILED; see report\n");
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jet schemes, fibers and dual-graph calculus for algebroid "
                 "surface singularities"};
    app.require_subcommand(1);

    JetArgs jet_args;
    auto* jet = app.add_subcommand("jet", "generate the level-m jet equations");
    jet->add_option("--def", jet_args.def_path, "surface definition (.toml/.json)")
        ->required();
    jet->add_option("--level", jet_args.level, "jet level m (default 2)");
    jet->add_option("--out", jet_args.out, "write JSON here");

    FiberArgs fiber_args;
    auto* fiber = app.add_subcommand("fiber", "specialize a ZZ_(p) family");
    fiber->add_option("--def", fiber_args.def_path, "surface definition")->required();
    fiber->add_option("--at", fiber_args.at, "special | generic")->required();
    fiber->add_option("--level", fiber_args.level, "also emit the jet system");
    fiber->add_option("--out", fiber_args.out, "write JSON here");

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count jet-scheme points over GF(q)");
    count->add_option("--def", count_args.def_path, "surface definition")->required();
    count->add_option("--level", count_args.level, "jet level m")->required();
    count->add_option("--q", count_args.q, "prime field size")->required();
    count->add_option("--sample", count_args.sample, "sample instead of enumerating");
    count->add_option("--seed", count_args.seed, "sampling seed");
    count->add_option("--limit", count_args.limit,
                      "exhaustive cap (else ARCSMITH_LIMIT, else 10^8)");
    count->add_option("--out", count_args.out, "write JSON here");

    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "resolution dual-graph calculus");
    graph->require_subcommand(1);
    auto* gmin = graph->add_subcommand("minimal", "contract to the minimal model");
    auto* gnr = graph->add_subcommand("nr", "count N_r");
    auto* gmatch = graph->add_subcommand("match", "match two intersection matrices");
    auto* ggood = graph->add_subcommand("goodness",
                                        "classify marked point data (good / very good)");
    for (auto* sub : {gmin, gnr, gmatch, ggood})
        sub->add_option("--g1", graph_args.g1_path, "graph JSON")->required();
    gmatch->add_option("--g2", graph_args.g2_path, "second graph JSON")->required();
    for (auto* sub : {gmin, gnr, gmatch, ggood})
        sub->add_option("--out", graph_args.out, "write JSON here");

    IntersectArgs intersect_args;
    auto* intersect =
        app.add_subcommand("intersect", "local intersection multiplicity at the origin");
    intersect->add_option("--f", intersect_args.f, "first germ in x, y")->required();
    intersect->add_option("--g", intersect_args.g, "second germ in x, y")->required();
    intersect->add_option("--field", intersect_args.field, "QQ or GF(p)");
    intersect->add_option("--cap", intersect_args.cap, "stabilization cap");
    intersect->add_option("--out", intersect_args.out, "write JSON here");

    WedgeArgs wedge_args;
    auto* wedge = app.add_subcommand("wedge", "explicit wedge u -> u*t of a frame arc");
    wedge->add_option("--def", wedge_args.def_path, "surface definition")->required();
    wedge->add_option("--arc", wedge_args.arc,
                      "comma-separated series in t: u, x1, x2 components")
        ->required();
    wedge->add_option("--frame", wedge_args.frame, "chart frame name")->required();
    wedge->add_option("--field", wedge_args.field, "arc field (default QQ)");
    wedge->add_option("--prec", wedge_args.prec, "series precision (default 8)");
    wedge->add_option("--out", wedge_args.out, "write JSON here");

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "run pipeline tasks and persist a report");
    run->add_option("--def", run_args.def_path, "surface definition")->required();
    run->add_option("--tasks", run_args.tasks,
                    "jet,fibers,counts,graphs,condition_no,intersections");
    run->add_option("--limit", run_args.limit, "exhaustive cap override");
    run->add_option("--out", run_args.out, "report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*jet) return cmd_jet(jet_args);
        if (*fiber) return cmd_fiber(fiber_args);
        if (*count) return cmd_count(count_args);
        if (*graph) {
            if (*gmin) return cmd_graph_minimal(graph_args);
            if (*gnr) return cmd_graph_nr(graph_args);
            if (*gmatch) return cmd_graph_match(graph_args);
            if (*ggood) return cmd_graph_goodness(graph_args);
        }
        if (*intersect) return cmd_intersect(intersect_args);
        if (*wedge) return cmd_wedge(wedge_args);
        if (*run) return cmd_run(run_args);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
