#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcsmith/arc.hpp"
#include "arcsmith/graph.hpp"
#include "arcsmith/jet.hpp"
#include "arcsmith/poly.hpp"
#include "arcsmith/ring.hpp"

namespace arcsmith {

struct ExperimentParams {
    std::vector<std::size_t> levels;
    std::vector<std::uint64_t> primes;
    std::uint64_t budget = 0;                  // condition-(NO) solution budget
    std::optional<std::uint64_t> seed;         // required whenever sampling runs
    std::optional<std::uint64_t> sample;       // sampled counting budget
    std::optional<std::uint64_t> count_limit;  // exhaustive enumeration cap
    std::size_t degree_cap = 16;               // intersection stabilization cap
};

struct IntersectionSpec {
    std::string point;
    std::string f, g; // expressions in x, y over the definition's field
};

// A declarative experiment input: the surface (or family) presentation plus
// everything the pipeline tasks need. Accepted as TOML or JSON with the same
// schema; see README for the field list.
struct SurfaceDefinition {
    std::string name;
    CoefficientRing ring = CoefficientRing::integers();
    std::vector<std::string> variables;
    std::vector<std::string> relation_sources; // original expression strings
    std::vector<SparsePoly> relations;
    std::vector<ChartFrame> frames;
    std::optional<DualGraph> graph_special;
    std::optional<DualGraph> graph_generic;
    std::vector<IntersectionSpec> intersections;
    ExperimentParams params;
    std::string source_text; // raw input bytes (hashed into reports)

    NiceTriplePresentation triple() const {
        return NiceTriplePresentation(ring, variables.size(), relations, name);
    }
    const ChartFrame& frame(std::string_view name) const;
};

SurfaceDefinition surface_definition_from_json(const nlohmann::json& doc,
                                               std::string source_text);

// Dispatches on the extension: .toml or .json.
SurfaceDefinition load_surface_definition(const std::filesystem::path& path);

} // namespace arcsmith
