#include "arcsmith/serialize.hpp"

#include <cstdio>

#include "arcsmith/errors.hpp"

namespace arcsmith {

using nlohmann::json;

json poly_to_json(const SparsePoly& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json exps = json::array();
        for (auto e : t.exps) exps.push_back(e);
        terms.push_back(json::array({exps, p.ring().str(t.coeff)}));
    }
    return terms;
}

SparsePoly poly_from_json(const json& j, const CoefficientRing& ring,
                          std::size_t nvars) {
    if (!j.is_array()) throw ConfigError("polynomial JSON must be an array of terms");
    std::vector<SparsePoly::Term> terms;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2)
            throw ConfigError("polynomial term must be [[exponents...], \"coeff\"]");
        Exponents exps;
        for (const auto& e : entry[0]) exps.push_back(e.get<std::uint32_t>());
        if (exps.size() != nvars)
            throw ConfigError("term exponent vector length " +
                              std::to_string(exps.size()) + " != nvars " +
                              std::to_string(nvars));
        terms.push_back({std::move(exps),
                         ring.from_string(entry[1].get<std::string>())});
    }
    return SparsePoly::from_terms(ring, nvars, std::move(terms));
}

json series_to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(s.ring().str(c));
    return json{{"precision", s.precision()},
                {"coeffs", std::move(coeffs)},
                {"text", s.str()}};
}

json jet_system_to_json(const JetSystem& js) {
    json rows = json::array();
    for (std::size_t j = 0; j < js.relation_count(); ++j) {
        json row = json::array();
        for (std::size_t q = 1; q <= js.level(); ++q)
            row.push_back(poly_to_json(js.equation(j, q)));
        rows.push_back(std::move(row));
    }
    return json{{"ring", js.ring().description()},
                {"n", js.nvars()},
                {"m", js.level()},
                {"equations", std::move(rows)}};
}

JetSystem jet_system_from_json(const json& j) {
    CoefficientRing ring = CoefficientRing::parse(j.at("ring").get<std::string>());
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t m = j.at("m").get<std::size_t>();
    std::vector<std::vector<SparsePoly>> grid;
    for (const auto& row : j.at("equations")) {
        std::vector<SparsePoly> cells;
        for (const auto& cell : row)
            cells.push_back(poly_from_json(cell, ring, n * m));
        grid.push_back(std::move(cells));
    }
    return JetSystem(std::move(ring), n, m, std::move(grid));
}

json graph_to_json(const DualGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices()) {
        json jv{{"id", v.id}, {"self", v.self_intersection}, {"genus", v.genus}};
        if (!v.label.empty()) jv["label"] = v.label;
        vertices.push_back(std::move(jv));
    }
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back(json{{"i", e.i}, {"j", e.j}, {"mult", e.multiplicity}});
    return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

DualGraph graph_from_json(const json& j) {
    std::vector<GraphVertex> vertices;
    for (const auto& v : j.at("vertices")) {
        GraphVertex gv;
        gv.id = v.at("id").get<std::int64_t>();
        gv.self_intersection = v.at("self").get<long long>();
        gv.genus = v.value("genus", 0u);
        gv.label = v.value("label", std::string{});
        vertices.push_back(std::move(gv));
    }
    std::vector<GraphEdge> edges;
    if (j.contains("edges")) {
        for (const auto& e : j.at("edges")) {
            GraphEdge ge;
            ge.i = e.at("i").get<std::int64_t>();
            ge.j = e.at("j").get<std::int64_t>();
            ge.multiplicity = e.value("mult", 1ull);
            edges.push_back(ge);
        }
    }
    return DualGraph(std::move(vertices), edges);
}

std::vector<PointData> points_from_json(const json& j) {
    std::vector<PointData> out;
    for (const auto& p : j) {
        PointData pd;
        pd.point = p.value("label", std::string{});
        for (const auto& c : p.at("curves")) pd.curves.push_back(c.get<std::int64_t>());
        out.push_back(std::move(pd));
    }
    return out;
}

json arc_to_json(const Arc& a) {
    json comps = json::array();
    for (const auto& c : a.components()) comps.push_back(c.str());
    return json{{"field", a.field().description()},
                {"precision", a.precision()},
                {"components", std::move(comps)}};
}

json wedge_to_json(const Wedge& w) {
    json comps = json::array();
    for (const auto& c : w.components()) comps.push_back(c.str());
    return json{{"field", w.field().description()},
                {"precision_u", w.prec_u()},
                {"precision_t", w.prec_t()},
                {"components", std::move(comps)}};
}

json count_to_json(const CountResult& r) {
    json out{{"exhaustive", r.exhaustive}, {"grid_size", r.grid_size.get_str()}};
    if (r.exhaustive) {
        out["count"] = r.count;
    } else {
        out["samples"] = r.samples;
        out["hits"] = r.hits;
        out["seed"] = r.seed;
        out["estimate"] = r.estimate;
        out["ci95"] = json::array({r.ci_low, r.ci_high});
        out["heuristic"] = true;
    }
    return out;
}

json probe_to_json(const DimensionProbe& p) {
    json rows = json::array();
    for (const auto& row : p.rows) {
        json jr{{"q", row.q}, {"m", row.m}};
        if (row.skipped) {
            jr["skipped"] = "grid too large; no sampling budget";
        } else {
            jr["count"] = count_to_json(row.count);
            if (row.log_q) jr["log_q"] = *row.log_q;
            if (row.delta_vs_prev_level) jr["delta"] = *row.delta_vs_prev_level;
        }
        rows.push_back(std::move(jr));
    }
    return json{{"rows", std::move(rows)},
                {"heuristic", true},
                {"not_a_theorem",
                 "log_q point counts approximate dimensions; finite-level data only"}};
}

json evidence_to_json(const ConditionNoEvidence& e) {
    json examples = json::array();
    for (const auto& ex : e.examples) {
        json je{{"arc", ex.arc_components}, {"lifted", ex.lifted}};
        if (ex.lifted) {
            je["frame"] = ex.frame;
            je["wedge_u_term"] = ex.wedge_u_term;
        }
        examples.push_back(std::move(je));
    }
    return json{{"level", e.level},
                {"field", "GF(" + std::to_string(e.p) + ")"},
                {"exhaustive", e.exhaustive},
                {"grid_points_checked", e.grid_points_checked},
                {"attempted", e.attempted},
                {"lifted", e.lifted},
                {"seed", e.seed},
                {"examples", std::move(examples)},
                {"heuristic", true},
                {"not_a_theorem", ConditionNoEvidence::kDisclaimer}};
}

json match_to_json(const MatchResult& m) {
    json bij = json::array();
    for (const auto& [a, b] : m.bijection) bij.push_back(json::array({a, b}));
    return json{{"bijection", std::move(bij)},
                {"essential_consistent", m.essential_consistent},
                {"nr", json::array({m.nr1, m.nr2})}};
}

json family_report_to_json(const FamilyInvarianceReport& r) {
    json out{{"matched", r.matched},
             {"nr_special", r.nr_special},
             {"nr_generic", r.nr_generic},
             {"nr_equal", r.nr_equal}};
    if (r.matched) {
        out["match"] = match_to_json(*r.match);
    } else {
        out["mismatch_reason"] = r.mismatch_reason;
    }
    return out;
}

json multiplicity_to_json(const MultiplicityResult& r) {
    if (!r.isolated) return json{{"not_isolated", true}};
    return json{{"multiplicity", r.multiplicity}, {"stabilized_at", r.stabilized_at}};
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string input_hash(std::string_view bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

} // namespace arcsmith
