#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arcsmith/arc.hpp"
#include "arcsmith/condition_no.hpp"
#include "arcsmith/count.hpp"
#include "arcsmith/graph.hpp"
#include "arcsmith/intersect.hpp"
#include "arcsmith/jet.hpp"
#include "arcsmith/poly.hpp"
#include "arcsmith/series.hpp"

namespace arcsmith {

// Canonical polynomial serialization: an array of terms
// [[exponents...], "coefficient"] in descending graded-lex order.
nlohmann::json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const nlohmann::json& j, const CoefficientRing& ring,
                          std::size_t nvars);

nlohmann::json series_to_json(const TruncatedSeries& s);

// JetSystem export: {"ring","n","m","equations":[[poly,...],...]}.
nlohmann::json jet_system_to_json(const JetSystem& js);
JetSystem jet_system_from_json(const nlohmann::json& j);

// Graph file format: {"vertices":[{"id","self","genus","label"}],
// "edges":[{"i","j","mult"}], "points": optional}.
nlohmann::json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const nlohmann::json& j);
std::vector<PointData> points_from_json(const nlohmann::json& j);

nlohmann::json arc_to_json(const Arc& a);
nlohmann::json wedge_to_json(const Wedge& w);

nlohmann::json count_to_json(const CountResult& r);
nlohmann::json probe_to_json(const DimensionProbe& p);
nlohmann::json evidence_to_json(const ConditionNoEvidence& e);
nlohmann::json match_to_json(const MatchResult& m);
nlohmann::json family_report_to_json(const FamilyInvarianceReport& r);
nlohmann::json multiplicity_to_json(const MultiplicityResult& r);

std::uint64_t fnv1a64(std::string_view bytes);
std::string input_hash(std::string_view bytes); // "fnv1a64:<hex>"

} // namespace arcsmith
