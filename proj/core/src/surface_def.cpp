#include "arcsmith/surface_def.hpp"

#include <fstream>
#include <sstream>

#include "arcsmith/errors.hpp"
#include "arcsmith/parse.hpp"
#include "arcsmith/serialize.hpp"
#include "arcsmith/toml_lite.hpp"

namespace arcsmith {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& v : j) out.push_back(v.get<std::string>());
    return out;
}

ChartFrame frame_from_json(const json& j, const CoefficientRing& ring,
                           const std::vector<std::string>& surface_vars) {
    ChartFrame f;
    f.name = j.at("name").get<std::string>();
    const std::string kind = j.value("case", "single_component");
    if (kind == "single_component") {
        f.kind = ChartFrame::Case::single_component;
    } else if (kind == "two_components") {
        f.kind = ChartFrame::Case::two_components;
    } else {
        throw ConfigError("frame '" + f.name + "': unknown case '" + kind + "'");
    }
    if (j.contains("coordinates")) {
        auto coords = string_list(j.at("coordinates"), "coordinates");
        if (coords.size() != 3)
            throw ConfigError("frame '" + f.name + "' needs 3 coordinates (u, x1, x2)");
        f.coordinates = {coords[0], coords[1], coords[2]};
    }
    const std::vector<std::string> chart_vars{f.coordinates[0], f.coordinates[1],
                                              f.coordinates[2]};
    if (j.contains("to_surface")) {
        for (const auto& src : string_list(j.at("to_surface"), "to_surface"))
            f.to_surface.push_back(parse_polynomial(src, ring, chart_vars));
        if (f.to_surface.size() != surface_vars.size())
            throw ConfigError("frame '" + f.name + "': to_surface needs " +
                              std::to_string(surface_vars.size()) + " entries");
    }
    if (j.contains("from_surface")) {
        for (const auto& src : string_list(j.at("from_surface"), "from_surface"))
            f.from_surface.push_back(parse_rational(src, ring, surface_vars));
    }
    f.validate();
    return f;
}

} // namespace

const ChartFrame& SurfaceDefinition::frame(std::string_view name) const {
    for (const auto& f : frames)
        if (f.name == name) return f;
    throw ConfigError("no chart frame named '" + std::string(name) + "'");
}

SurfaceDefinition surface_definition_from_json(const json& doc,
                                               std::string source_text) {
    if (!doc.is_object()) throw ConfigError("surface definition must be a table");
    SurfaceDefinition def;
    def.source_text = std::move(source_text);

    if (!doc.contains("name")) throw ConfigError("surface definition needs a name");
    def.name = doc.at("name").get<std::string>();
    def.ring = CoefficientRing::parse(doc.at("ring").get<std::string>());
    def.variables = string_list(doc.at("variables"), "variables");
    if (def.variables.empty())
        throw ConfigError("surface definition needs at least one variable");

    def.relation_sources = string_list(doc.at("relations"), "relations");
    for (const auto& src : def.relation_sources) {
        SparsePoly f = parse_polynomial(src, def.ring, def.variables);
        if (!def.ring.is_zero(f.constant_term()))
            throw ConfigError("relation '" + src + "' has a nonzero constant term");
        def.relations.push_back(std::move(f));
    }

    if (doc.contains("frames")) {
        for (const auto& jf : doc.at("frames"))
            def.frames.push_back(frame_from_json(jf, def.ring, def.variables));
    }

    if (doc.contains("graphs")) {
        const json& graphs = doc.at("graphs");
        if (graphs.contains("special"))
            def.graph_special = graph_from_json(graphs.at("special"));
        if (graphs.contains("generic"))
            def.graph_generic = graph_from_json(graphs.at("generic"));
    }

    if (doc.contains("intersections")) {
        for (const auto& ji : doc.at("intersections")) {
            IntersectionSpec spec;
            spec.point = ji.value("point", std::string{});
            spec.f = ji.at("f").get<std::string>();
            spec.g = ji.at("g").get<std::string>();
            def.intersections.push_back(std::move(spec));
        }
    }

    if (doc.contains("params")) {
        const json& p = doc.at("params");
        if (p.contains("levels"))
            for (const auto& v : p.at("levels"))
                def.params.levels.push_back(v.get<std::size_t>());
        if (p.contains("primes"))
            for (const auto& v : p.at("primes"))
                def.params.primes.push_back(v.get<std::uint64_t>());
        if (p.contains("budget")) def.params.budget = p.at("budget").get<std::uint64_t>();
        if (p.contains("seed")) def.params.seed = p.at("seed").get<std::uint64_t>();
        if (p.contains("sample")) def.params.sample = p.at("sample").get<std::uint64_t>();
        if (p.contains("count_limit"))
            def.params.count_limit = p.at("count_limit").get<std::uint64_t>();
        if (p.contains("degree_cap"))
            def.params.degree_cap = p.at("degree_cap").get<std::size_t>();
    }

    // reproducibility: sampling without a seed is a configuration error
    if ((def.params.sample.has_value() || def.params.budget > 0) &&
        !def.params.seed.has_value())
        throw ConfigError("definition '" + def.name +
                          "' requests sampling (sample/budget) but has no seed");

    for (std::size_t m : def.params.levels)
        if (m < 1) throw ConfigError("jet levels must be >= 1");

    return def;
}

SurfaceDefinition load_surface_definition(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    const std::string ext = path.extension().string();
    json doc;
    if (ext == ".toml") {
        doc = toml_lite::parse(text);
    } else if (ext == ".json") {
        doc = json::parse(text);
    } else {
        throw ConfigError("unknown definition format '" + ext +
                          "' (expected .toml or .json)");
    }
    return surface_definition_from_json(doc, std::move(text));
}

} // namespace arcsmith
