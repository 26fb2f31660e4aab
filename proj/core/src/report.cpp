#include "arcsmith/report.hpp"

#include <algorithm>
#include <fstream>

#include "arcsmith/condition_no.hpp"
#include "arcsmith/errors.hpp"
#include "arcsmith/intersect.hpp"
#include "arcsmith/parse.hpp"
#include "arcsmith/serialize.hpp"

namespace arcsmith {

using nlohmann::json;

const char* task_name(Task t) {
    switch (t) {
    case Task::jet: return "jet";
    case Task::fibers: return "fibers";
    case Task::counts: return "counts";
    case Task::graphs: return "graphs";
    case Task::condition_no: return "condition_no";
    case Task::intersections: return "intersections";
    }
    return "?";
}

std::vector<Task> parse_tasks(std::string_view csv) {
    std::vector<Task> out;
    auto push = [&](Task t) {
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    };
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string_view name = csv.substr(start, comma - start);
        while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
        while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
        if (!name.empty()) {
            if (name == "jet") push(Task::jet);
            else if (name == "fibers") push(Task::fibers);
            else if (name == "counts") push(Task::counts);
            else if (name == "graphs") push(Task::graphs);
            else if (name == "condition_no") push(Task::condition_no);
            else if (name == "intersections") push(Task::intersections);
            else throw ConfigError("unknown task '" + std::string(name) + "'");
        }
        start = comma + 1;
    }
    // dependency order is the enum order
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct CertTally {
    std::uint64_t passed = 0, failed = 0;
    json failures = json::array();

    void pass() { ++passed; }
    void fail(std::string what) {
        ++failed;
        failures.push_back(std::move(what));
    }
    json to_json() const {
        json out{{"passed", passed}, {"failed", failed}};
        if (failed) out["failures"] = failures;
        return out;
    }
};

std::vector<std::size_t> effective_levels(const SurfaceDefinition& def) {
    std::vector<std::size_t> levels = def.params.levels;
    if (levels.empty()) levels = {1, 2};
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

json jet_stats(const JetSystem& js) {
    std::size_t nonzero = 0, max_degree = 0;
    for (std::size_t j = 0; j < js.relation_count(); ++j)
        for (std::size_t q = 1; q <= js.level(); ++q) {
            const SparsePoly& cell = js.equation(j, q);
            if (!cell.is_zero()) {
                ++nonzero;
                max_degree = std::max(max_degree, cell.total_degree());
            }
        }
    return json{{"level", js.level()},
                {"equations_total", js.relation_count() * js.level()},
                {"equations_nonzero", nonzero},
                {"max_degree", max_degree},
                {"grid_variables", js.grid_var_count()}};
}

void run_jet_task(const SurfaceDefinition& def, json& report, CertTally& certs) {
    NiceTriplePresentation tri = def.triple();
    auto levels = effective_levels(def);
    const std::size_t top = levels.back();

    json stats = json::array();
    for (std::size_t m : levels) stats.push_back(jet_stats(generate_jet_system(tri, m)));
    report["jet"] = json{{"levels", levels}, {"stats", std::move(stats)}};

    // truncation coherence across every level pair up to the top level
    for (std::size_t hi = 1; hi <= top; ++hi) {
        for (std::size_t lo = 1; lo <= hi; ++lo) {
            try {
                project_jet(tri, hi, lo);
                certs.pass();
            } catch (const CertificationError& e) {
                certs.fail("project_jet(" + std::to_string(hi) + "," +
                           std::to_string(lo) + "): " + e.what());
            }
        }
    }
}

void run_fibers_task(const SurfaceDefinition& def, json& report, CertTally& certs) {
    if (def.ring.kind() != CoefficientRing::Kind::localized_integers) {
        report["fibers"] = json{{"skipped", "definition ring " + def.ring.description() +
                                                " has no special/generic fibers"}};
        return;
    }
    NiceTriplePresentation tri = def.triple();
    NiceTriplePresentation special = fiber_at(tri, FiberPoint::special);
    NiceTriplePresentation generic = fiber_at(tri, FiberPoint::generic);

    auto relation_strings = [](const NiceTriplePresentation& t) {
        json out = json::array();
        auto names = t.variable_names();
        for (const auto& f : t.relations()) out.push_back(f.str(names));
        return out;
    };
    report["fibers"] = json{
        {"special", json{{"ring", special.ring().description()},
                         {"relations", relation_strings(special)}}},
        {"generic", json{{"ring", generic.ring().description()},
                         {"relations", relation_strings(generic)}}}};

    // base-change commutation: generate-then-reduce == reduce-then-generate
    for (std::size_t m : effective_levels(def)) {
        JetSystem family = generate_jet_system(tri, m);
        for (const auto* fiber : {&special, &generic}) {
            JetSystem direct = generate_jet_system(*fiber, m);
            bool ok = true;
            for (std::size_t j = 0; j < family.relation_count() && ok; ++j)
                for (std::size_t q = 1; q <= m && ok; ++q)
                    ok = direct.equation(j, q) ==
                         family.equation(j, q).reduce_coefficients(fiber->ring());
            if (ok)
                certs.pass();
            else
                certs.fail("base-change commutation failed at level " +
                           std::to_string(m) + " into " +
                           fiber->ring().description());
        }
    }
}

void run_counts_task(const SurfaceDefinition& def, json& report,
                     const CountOptions& opts) {
    NiceTriplePresentation tri = def.triple();
    auto levels = effective_levels(def);
    std::vector<std::uint64_t> primes = def.params.primes;
    if (primes.empty() &&
        def.ring.kind() == CoefficientRing::Kind::localized_integers)
        primes = {def.ring.prime()};

    json rows = json::array();
    for (std::uint64_t q : primes) {
        CoefficientRing fq = CoefficientRing::prime_field(q);
        if (!has_coefficient_hom(tri.ring(), fq)) {
            rows.push_back(json{{"q", q},
                                {"skipped", "no canonical map " +
                                                tri.ring().description() + " -> " +
                                                fq.description()}});
            continue;
        }
        NiceTriplePresentation reduced = base_change(tri, fq);
        for (std::size_t m : levels) {
            JetSystem js = generate_jet_system(reduced, m);
            json row{{"q", q}, {"m", m}};
            mpz_class grid = 1;
            for (std::size_t v = 0; v < js.grid_var_count(); ++v)
                grid *= static_cast<unsigned long>(q);
            if (grid <= opts.exhaustive_limit) {
                row["count"] = count_to_json(count_points(js, opts));
            } else if (def.params.sample) {
                row["count"] = count_to_json(count_points_sampled(
                    js, *def.params.sample, *def.params.seed, opts));
            } else {
                row["skipped"] = "grid " + grid.get_str() +
                                 " exceeds the exhaustive limit and no sample "
                                 "budget is configured";
            }
            rows.push_back(std::move(row));
        }
    }
    report["counts"] = std::move(rows);

    DimensionProbe probe = dimension_probe(
        tri, primes, levels, opts, def.params.sample.value_or(0),
        def.params.seed.value_or(0));
    report["dimension_probe"] = probe_to_json(probe);

    // the Nash counting frame: N_r comes from graph data when present; N_n is
    // not computable from finite-level point counts and is never asserted
    json nash{{"N_n", nullptr},
              {"inequality", "N_n <= N_r"},
              {"heuristic", true},
              {"not_a_theorem",
               "finite-level point counts cannot separate irreducible "
               "components; N_n is left open"}};
    if (def.graph_special) nash["N_r_special"] = count_nr(*def.graph_special);
    if (def.graph_generic) nash["N_r_generic"] = count_nr(*def.graph_generic);
    report["nash_counting"] = std::move(nash);
}

void run_graphs_task(const SurfaceDefinition& def, json& report) {
    if (!def.graph_special && !def.graph_generic) {
        report["graphs"] = json{{"skipped", "definition carries no dual graphs"}};
        return;
    }
    json out;
    auto describe = [&](const DualGraph& g) {
        if (!g.is_connected())
            throw ConfigError("definition '" + def.name +
                              "': exceptional configurations must be connected");
        if (!is_negative_definite(intersection_matrix(g)))
            throw ConfigError("definition '" + def.name +
                              "': intersection matrix is not negative definite");
        MinimalModelResult mm = minimal_model(g);
        return json{{"graph", graph_to_json(g)},
                    {"connected", true},
                    {"negative_definite", true},
                    {"minimal_model", graph_to_json(mm.graph)},
                    {"essential", std::vector<std::int64_t>(mm.essential.begin(),
                                                            mm.essential.end())},
                    {"N_r", mm.graph.size()}};
    };
    if (def.graph_special) out["special"] = describe(*def.graph_special);
    if (def.graph_generic) out["generic"] = describe(*def.graph_generic);
    if (def.graph_special && def.graph_generic)
        out["family_invariance"] = family_report_to_json(
            family_invariance_check(*def.graph_special, *def.graph_generic));
    report["graphs"] = std::move(out);
}

void run_condition_no_task(const SurfaceDefinition& def, json& report,
                           const CountOptions& opts) {
    if (def.ring.kind() != CoefficientRing::Kind::localized_integers) {
        report["condition_no"] =
            json{{"skipped", "condition-(NO) sampling needs a ZZ_(p) family"}};
        return;
    }
    if (def.frames.empty())
        throw ConfigError("condition_no task needs chart frames in the definition");
    NiceTriplePresentation tri = def.triple();
    json out = json::array();
    for (std::size_t m : effective_levels(def)) {
        ConditionNoEvidence e = sample_condition_no(
            tri, m, def.ring.prime(), def.params.budget, def.frames,
            def.params.seed.value_or(0), opts.exhaustive_limit);
        out.push_back(evidence_to_json(e));
    }
    report["condition_no"] = std::move(out);
}

void run_intersections_task(const SurfaceDefinition& def, json& report) {
    if (def.intersections.empty()) {
        report["intersections"] =
            json{{"skipped", "definition lists no intersection pairs"}};
        return;
    }
    CoefficientRing field = def.ring.is_field() ? def.ring
                                                : CoefficientRing::rationals();
    const std::vector<std::string> xy{"x", "y"};
    json rows = json::array();
    std::size_t total = 0;
    bool all_isolated = true;
    for (const auto& spec : def.intersections) {
        LocalPair pair{field, parse_polynomial(spec.f, field, xy),
                       parse_polynomial(spec.g, field, xy)};
        MultiplicityResult r =
            local_intersection_multiplicity(pair, def.params.degree_cap);
        json row{{"point", spec.point}, {"f", spec.f}, {"g", spec.g},
                 {"result", multiplicity_to_json(r)}};
        rows.push_back(std::move(row));
        if (r.isolated) total += r.multiplicity;
        else all_isolated = false;
    }
    json out{{"field", field.description()}, {"pairs", std::move(rows)}};
    if (all_isolated) out["total"] = total;
    report["intersections"] = std::move(out);
}

} // namespace

PipelineResult run_pipeline(const SurfaceDefinition& def,
                            std::span<const Task> tasks,
                            const CountOptions& opts) {
    PipelineResult result;
    json& report = result.report;
    report["schema"] = kReportSchema;
    report["tool"] = kToolVersion;
    report["name"] = def.name;
    report["ring"] = def.ring.description();
    report["input_hash"] = input_hash(def.source_text);
    if (def.params.seed) report["seed"] = *def.params.seed;
    json task_list = json::array();
    for (Task t : tasks) task_list.push_back(task_name(t));
    report["tasks"] = std::move(task_list);

    CertTally certs;
    for (Task t : tasks) {
        switch (t) {
        case Task::jet: run_jet_task(def, report, certs); break;
        case Task::fibers: run_fibers_task(def, report, certs); break;
        case Task::counts: run_counts_task(def, report, opts); break;
        case Task::graphs: run_graphs_task(def, report); break;
        case Task::condition_no: run_condition_no_task(def, report, opts); break;
        case Task::intersections: run_intersections_task(def, report); break;
        }
    }
    report["certifications"] = certs.to_json();
    result.certifications_ok = certs.failed == 0;
    return result;
}

std::string report_to_bytes(const json& report) { return report.dump(2) + "\n"; }

void write_report(const json& report, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << report_to_bytes(report);
}

} // namespace arcsmith
