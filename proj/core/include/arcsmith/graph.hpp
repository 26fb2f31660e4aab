#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arcsmith {

// Weighted dual graph of a resolution: vertices are irreducible exceptional
// curves with self-intersection and genus; an edge multiplicity counts the
// transversal intersection points (E_i.E_j) of two distinct curves.
struct GraphVertex {
    std::int64_t id = 0;
    long long self_intersection = 0;
    unsigned genus = 0;
    std::string label;

    bool operator==(const GraphVertex&) const = default;
};

struct GraphEdge {
    std::int64_t i = 0, j = 0;
    unsigned long long multiplicity = 1;
};

class DualGraph {
public:
    DualGraph() = default;
    // Validates ids, merges duplicate edges by summing multiplicities.
    DualGraph(std::vector<GraphVertex> vertices, std::span<const GraphEdge> edges);

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    const std::vector<GraphVertex>& vertices() const { return vertices_; }
    const GraphVertex& vertex(std::int64_t id) const;
    bool has_vertex(std::int64_t id) const;

    unsigned long long edge_multiplicity(std::int64_t i, std::int64_t j) const;
    // canonical list: i < j, sorted
    std::vector<GraphEdge> edges() const;

    bool is_connected() const; // graphs with <= 1 vertex count as connected

    bool operator==(const DualGraph& other) const;

private:
    std::vector<GraphVertex> vertices_; // sorted by id
    std::map<std::pair<std::int64_t, std::int64_t>, unsigned long long> edges_;
};

class IntersectionMatrix {
public:
    IntersectionMatrix(std::vector<std::int64_t> ids,
                       std::vector<long long> entries);

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::int64_t>& ids() const { return ids_; }
    long long at(std::size_t r, std::size_t c) const {
        return entries_[r * ids_.size() + c];
    }

    bool operator==(const IntersectionMatrix&) const = default;

private:
    std::vector<std::int64_t> ids_; // row/column order
    std::vector<long long> entries_;
};

// M[i][i] = self-intersection, M[i][j] = total edge multiplicity.
IntersectionMatrix intersection_matrix(const DualGraph& g);

// Exact check via leading principal minors: they must alternate in sign
// starting negative.
bool is_negative_definite(const IntersectionMatrix& m);

enum class Goodness { neither, good, very_good };

struct PointData {
    std::string point;
    std::vector<std::int64_t> curves; // incident curve ids
};

// good: every marked point lies on at most 2 curves; very good: additionally
// every pair of curves shares at most one point. point_data must be
// consistent with the edge multiplicities.
Goodness check_goodness(const DualGraph& g, std::span<const PointData> point_data);

// Castelnuovo blow-down of a genus-0, self-intersection -1 vertex:
//   (E_i.E_j) += (E_i.E_v)(E_j.E_v),  E_i^2 += (E_i.E_v)^2,  genera unchanged.
DualGraph contract_vertex(const DualGraph& g, std::int64_t v);

// Either a free point on curve i (j absent) or an intersection point of
// curves i and j.
struct BlowUpLocus {
    std::int64_t i = 0;
    std::optional<std::int64_t> j;
};

// Inverse of contract_vertex: inserts a fresh genus-0, -1 vertex at the
// locus. The new vertex id is max(id)+1 (or 1 on the empty graph).
DualGraph blow_up(const DualGraph& g, const BlowUpLocus& locus);

struct MinimalModelResult {
    DualGraph graph;
    std::set<std::int64_t> essential; // original vertex ids that survive
};

// Contracts genus-0, -1 vertices until none remains. The result does not
// depend on the contraction order; vertices surviving to the end are the
// essential components.
MinimalModelResult minimal_model(const DualGraph& g);

// Number of exceptional curves of the minimal model.
std::size_t count_nr(const DualGraph& g);

struct MatchResult {
    std::vector<std::pair<std::int64_t, std::int64_t>> bijection; // g1 id -> g2 id
    bool essential_consistent = false;
    std::size_t nr1 = 0, nr2 = 0;
};

// Searches vertex bijections making intersection matrices and genus vectors
// equal. Brute force over permutations with invariant pruning; inputs larger
// than 10 vertices are rejected with a resource error. Absence of a match is
// a normal result.
std::optional<MatchResult> matrices_match(const DualGraph& g1, const DualGraph& g2);

struct FamilyInvarianceReport {
    bool matched = false;
    std::optional<MatchResult> match;
    std::string mismatch_reason; // first distinguishing invariant
    std::size_t nr_special = 0, nr_generic = 0;
    bool nr_equal = false;
};

// Compares the resolution data of the special and generic fibers: on a match
// reports the N_r equality, otherwise the first distinguishing invariant
// (N_r values are reported either way).
FamilyInvarianceReport family_invariance_check(const DualGraph& special,
                                               const DualGraph& generic);

} // namespace arcsmith
