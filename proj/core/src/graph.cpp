#include "arcsmith/graph.hpp"

#include <algorithm>
#include <functional>

#include <gmpxx.h>

#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

std::pair<std::int64_t, std::int64_t> ordered(std::int64_t i, std::int64_t j) {
    return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
}

constexpr std::size_t kMatchCap = 10;

} // namespace

DualGraph::DualGraph(std::vector<GraphVertex> vertices,
                     std::span<const GraphEdge> edges)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end(),
              [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; });
    for (std::size_t k = 1; k < vertices_.size(); ++k)
        if (vertices_[k].id == vertices_[k - 1].id)
            throw StructuralError("duplicate vertex id " +
                                  std::to_string(vertices_[k].id));
    for (const auto& e : edges) {
        if (e.i == e.j)
            throw StructuralError("self-edge on vertex " + std::to_string(e.i) +
                                  " (self-intersections are vertex data)");
        if (!has_vertex(e.i) || !has_vertex(e.j))
            throw StructuralError("edge (" + std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ") references a missing vertex");
        if (e.multiplicity == 0)
            throw StructuralError("edge multiplicity must be positive");
        edges_[ordered(e.i, e.j)] += e.multiplicity;
    }
}

const GraphVertex& DualGraph::vertex(std::int64_t id) const {
    auto it = std::lower_bound(
        vertices_.begin(), vertices_.end(), id,
        [](const GraphVertex& v, std::int64_t key) { return v.id < key; });
    if (it == vertices_.end() || it->id != id)
        throw StructuralError("no vertex with id " + std::to_string(id));
    return *it;
}

bool DualGraph::has_vertex(std::int64_t id) const {
    auto it = std::lower_bound(
        vertices_.begin(), vertices_.end(), id,
        [](const GraphVertex& v, std::int64_t key) { return v.id < key; });
    return it != vertices_.end() && it->id == id;
}

unsigned long long DualGraph::edge_multiplicity(std::int64_t i,
                                                std::int64_t j) const {
    if (i == j) return 0;
    auto it = edges_.find(ordered(i, j));
    return it == edges_.end() ? 0 : it->second;
}

std::vector<GraphEdge> DualGraph::edges() const {
    std::vector<GraphEdge> out;
    out.reserve(edges_.size());
    for (const auto& [key, mult] : edges_)
        out.push_back({key.first, key.second, mult});
    return out;
}

bool DualGraph::is_connected() const {
    if (vertices_.size() <= 1) return true;
    std::set<std::int64_t> seen{vertices_[0].id};
    std::vector<std::int64_t> stack{vertices_[0].id};
    while (!stack.empty()) {
        std::int64_t v = stack.back();
        stack.pop_back();
        for (const auto& [key, mult] : edges_) {
            std::int64_t other = -1;
            if (key.first == v) other = key.second;
            else if (key.second == v) other = key.first;
            else continue;
            if (seen.insert(other).second) stack.push_back(other);
        }
    }
    return seen.size() == vertices_.size();
}

bool DualGraph::operator==(const DualGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
}

IntersectionMatrix::IntersectionMatrix(std::vector<std::int64_t> ids,
                                       std::vector<long long> entries)
    : ids_(std::move(ids)), entries_(std::move(entries)) {
    if (entries_.size() != ids_.size() * ids_.size())
        throw StructuralError("intersection matrix shape mismatch");
}

IntersectionMatrix intersection_matrix(const DualGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::int64_t> ids;
    ids.reserve(n);
    for (const auto& v : g.vertices()) ids.push_back(v.id);
    std::vector<long long> entries(n * n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        entries[r * n + r] = g.vertices()[r].self_intersection;
        for (std::size_t c = r + 1; c < n; ++c) {
            long long m = static_cast<long long>(g.edge_multiplicity(ids[r], ids[c]));
            entries[r * n + c] = m;
            entries[c * n + r] = m;
        }
    }
    return IntersectionMatrix(std::move(ids), std::move(entries));
}

bool is_negative_definite(const IntersectionMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return true; // vacuous
    // exact leading principal minors by fraction-free Gaussian elimination
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<mpz_class> a(k * k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                a[r * k + c] = mpz_class(static_cast<long>(m.at(r, c)));
        mpz_class det = 1;
        bool singular = false;
        mpz_class prev = 1;
        for (std::size_t col = 0; col < k && !singular; ++col) {
            std::size_t pivot = col;
            while (pivot < k && a[pivot * k + col] == 0) ++pivot;
            if (pivot == k) {
                singular = true;
                break;
            }
            if (pivot != col) {
                for (std::size_t c = col; c < k; ++c)
                    std::swap(a[pivot * k + c], a[col * k + c]);
                det = -det;
            }
            for (std::size_t r = col + 1; r < k; ++r) {
                for (std::size_t c = col + 1; c < k; ++c) {
                    a[r * k + c] = (a[r * k + c] * a[col * k + col] -
                                    a[r * k + col] * a[col * k + c]) /
                                   prev; // Bareiss: division is exact
                }
                a[r * k + col] = 0;
            }
            prev = a[col * k + col];
        }
        if (singular) return false;
        det *= a[(k - 1) * k + (k - 1)];
        // sign must be (-1)^k
        const bool want_negative = (k % 2) == 1;
        if (det == 0) return false;
        if (want_negative != (det < 0)) return false;
    }
    return true;
}

Goodness check_goodness(const DualGraph& g, std::span<const PointData> point_data) {
    // consistency: every edge (i,j) of multiplicity d has exactly d points
    // incident to both i and j
    std::map<std::pair<std::int64_t, std::int64_t>, unsigned long long> seen;
    for (const auto& pt : point_data) {
        for (std::int64_t c : pt.curves)
            if (!g.has_vertex(c))
                throw ConfigError("point '" + pt.point +
                                  "' references missing curve " + std::to_string(c));
        for (std::size_t a = 0; a < pt.curves.size(); ++a)
            for (std::size_t b = a + 1; b < pt.curves.size(); ++b)
                seen[ordered(pt.curves[a], pt.curves[b])] += 1;
    }
    for (const auto& v1 : g.vertices())
        for (const auto& v2 : g.vertices()) {
            if (v1.id >= v2.id) continue;
            unsigned long long expect = g.edge_multiplicity(v1.id, v2.id);
            auto it = seen.find(ordered(v1.id, v2.id));
            unsigned long long got = it == seen.end() ? 0 : it->second;
            if (expect != got)
                throw ConfigError(
                    "point data inconsistent with edge (" + std::to_string(v1.id) +
                    "," + std::to_string(v2.id) + "): multiplicity " +
                    std::to_string(expect) + " but " + std::to_string(got) +
                    " common points");
        }

    bool good = true;
    for (const auto& pt : point_data)
        if (pt.curves.size() > 2) good = false;
    if (!good) return Goodness::neither;
    for (const auto& e : g.edges())
        if (e.multiplicity > 1) return Goodness::good;
    return Goodness::very_good;
}

DualGraph contract_vertex(const DualGraph& g, std::int64_t v) {
    const GraphVertex& vert = g.vertex(v);
    if (vert.self_intersection != -1 || vert.genus != 0)
        throw PreconditionError("vertex " + std::to_string(v) +
                                " is not contractible (needs genus 0 and "
                                "self-intersection -1)");
    std::vector<GraphVertex> vertices;
    vertices.reserve(g.size() - 1);
    for (const auto& w : g.vertices()) {
        if (w.id == v) continue;
        GraphVertex nw = w;
        unsigned long long mv = g.edge_multiplicity(w.id, v);
        nw.self_intersection += static_cast<long long>(mv * mv);
        vertices.push_back(nw);
    }
    std::vector<GraphEdge> edges;
    for (const auto& w1 : g.vertices()) {
        if (w1.id == v) continue;
        for (const auto& w2 : g.vertices()) {
            if (w2.id == v || w2.id <= w1.id) continue;
            unsigned long long m = g.edge_multiplicity(w1.id, w2.id) +
                                   g.edge_multiplicity(w1.id, v) *
                                       g.edge_multiplicity(w2.id, v);
            if (m > 0) edges.push_back({w1.id, w2.id, m});
        }
    }
    return DualGraph(std::move(vertices), edges);
}

DualGraph blow_up(const DualGraph& g, const BlowUpLocus& locus) {
    std::int64_t fresh = 1;
    for (const auto& v : g.vertices()) fresh = std::max(fresh, v.id + 1);

    std::vector<GraphVertex> vertices = g.vertices();
    std::vector<GraphEdge> edges = g.edges();

    auto lower = [&](std::int64_t id) {
        for (auto& v : vertices)
            if (v.id == id) {
                v.self_intersection -= 1;
                return;
            }
        throw StructuralError("no vertex with id " + std::to_string(id));
    };

    if (!locus.j) {
        // free point on E_i
        (void)g.vertex(locus.i);
        lower(locus.i);
        vertices.push_back({fresh, -1, 0, ""});
        edges.push_back({locus.i, fresh, 1});
    } else {
        if (g.edge_multiplicity(locus.i, *locus.j) < 1)
            throw PreconditionError("curves " + std::to_string(locus.i) + " and " +
                                    std::to_string(*locus.j) +
                                    " have no intersection point to blow up");
        lower(locus.i);
        lower(*locus.j);
        for (auto& e : edges) {
            if (ordered(e.i, e.j) == ordered(locus.i, *locus.j)) {
                e.multiplicity -= 1;
                break;
            }
        }
        std::erase_if(edges, [](const GraphEdge& e) { return e.multiplicity == 0; });
        vertices.push_back({fresh, -1, 0, ""});
        edges.push_back({locus.i, fresh, 1});
        edges.push_back({*locus.j, fresh, 1});
    }
    return DualGraph(std::move(vertices), edges);
}

MinimalModelResult minimal_model(const DualGraph& g) {
    DualGraph current = g;
    for (;;) {
        std::optional<std::int64_t> target;
        for (const auto& v : current.vertices()) {
            if (v.self_intersection == -1 && v.genus == 0) {
                target = v.id; // smallest id first: vertices are sorted
                break;
            }
        }
        if (!target) break;
        current = contract_vertex(current, *target);
    }
    std::set<std::int64_t> essential;
    for (const auto& v : current.vertices()) essential.insert(v.id);
    return {std::move(current), std::move(essential)};
}

std::size_t count_nr(const DualGraph& g) {
    return minimal_model(g).graph.size();
}

std::optional<MatchResult> matrices_match(const DualGraph& g1,
                                          const DualGraph& g2) {
    if (g1.size() != g2.size()) return std::nullopt;
    const std::size_t n = g1.size();
    if (n > kMatchCap)
        throw ResourceLimitError("matrices_match caps at " +
                                 std::to_string(kMatchCap) + " vertices, got " +
                                 std::to_string(n));
    if (n == 0) {
        return MatchResult{{}, true, 0, 0};
    }

    const auto& v1 = g1.vertices();
    const auto& v2 = g2.vertices();

    // backtracking over assignments v1[k] -> v2[perm[k]], pruning on vertex
    // invariants and on edges into the assigned prefix
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
        if (k == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            if (v1[k].self_intersection != v2[c].self_intersection ||
                v1[k].genus != v2[c].genus)
                continue;
            bool ok = true;
            for (std::size_t prev = 0; prev < k && ok; ++prev)
                ok = g1.edge_multiplicity(v1[k].id, v1[prev].id) ==
                     g2.edge_multiplicity(v2[c].id, v2[perm[prev]].id);
            if (!ok) continue;
            perm[k] = c;
            used[c] = true;
            if (place(k + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;

    MatchResult out;
    for (std::size_t k = 0; k < n; ++k)
        out.bijection.emplace_back(v1[k].id, v2[perm[k]].id);

    MinimalModelResult m1 = minimal_model(g1);
    MinimalModelResult m2 = minimal_model(g2);
    out.nr1 = m1.graph.size();
    out.nr2 = m2.graph.size();
    out.essential_consistent = true;
    for (const auto& [a, b] : out.bijection)
        if (m1.essential.contains(a) != m2.essential.contains(b))
            out.essential_consistent = false;
    return out;
}

FamilyInvarianceReport family_invariance_check(const DualGraph& special,
                                               const DualGraph& generic) {
    FamilyInvarianceReport report;
    report.nr_special = count_nr(special);
    report.nr_generic = count_nr(generic);
    report.nr_equal = report.nr_special == report.nr_generic;

    if (special.size() != generic.size()) {
        report.mismatch_reason = "vertex count differs (" +
                                 std::to_string(special.size()) + " vs " +
                                 std::to_string(generic.size()) + ")";
        return report;
    }
    auto profile = [](const DualGraph& g) {
        std::multiset<std::pair<long long, unsigned>> p;
        for (const auto& v : g.vertices()) p.insert({v.self_intersection, v.genus});
        return p;
    };
    if (profile(special) != profile(generic)) {
        report.mismatch_reason =
            "(self-intersection, genus) multisets differ";
        return report;
    }
    auto match = matrices_match(special, generic);
    if (!match) {
        report.mismatch_reason =
            "no vertex bijection matches the intersection matrices";
        return report;
    }
    report.matched = true;
    report.match = std::move(match);
    return report;
}

} // namespace arcsmith
