#include <doctest.h>

#include <functional>
#include <random>

#include "arcsmith/errors.hpp"
#include "arcsmith/graph.hpp"

#include "corpus.hpp"

using namespace arcsmith;

namespace {

// every maximal contraction order must reach the same labeled graph and the
// same essential set
void check_confluence(const DualGraph& g) {
    std::optional<DualGraph> final_graph;
    std::function<void(const DualGraph&)> walk = [&](const DualGraph& h) {
        std::vector<std::int64_t> targets;
        for (const auto& v : h.vertices())
            if (v.self_intersection == -1 && v.genus == 0) targets.push_back(v.id);
        if (targets.empty()) {
            if (!final_graph) {
                final_graph = h;
            } else {
                CHECK(*final_graph == h);
            }
            return;
        }
        for (std::int64_t t : targets) walk(contract_vertex(h, t));
    };
    walk(g);
    CHECK(final_graph.has_value());
}

} // namespace

TEST_CASE("intersection matrices") {
    IntersectionMatrix a2 = intersection_matrix(corpus::an_chain(2));
    CHECK(a2.at(0, 0) == -2);
    CHECK(a2.at(0, 1) == 1);
    CHECK(a2.at(1, 0) == 1);
    CHECK(a2.at(1, 1) == -2);

    IntersectionMatrix single = intersection_matrix(corpus::chain({-1}));
    CHECK(single.size() == 1);
    CHECK(single.at(0, 0) == -1);

    IntersectionMatrix a3 = intersection_matrix(corpus::an_chain(3));
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(a3.at(r, c) == (r == c ? -2 : (r + 1 == c || c + 1 == r ? 1 : 0)));
}

TEST_CASE("negative definiteness by exact minors") {
    CHECK(is_negative_definite(intersection_matrix(corpus::an_chain(2))));
    // [[-1,2],[2,-1]] has determinant -3
    DualGraph bad({{1, -1, 0, ""}, {2, -1, 0, ""}},
                  std::vector<GraphEdge>{{1, 2, 2}});
    CHECK_FALSE(is_negative_definite(intersection_matrix(bad)));
    CHECK_FALSE(is_negative_definite(intersection_matrix(corpus::chain({0}))));
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(is_negative_definite(intersection_matrix(corpus::an_chain(n))));
    // degenerate: (-1)--(-1) has determinant 0
    DualGraph degenerate({{1, -1, 0, ""}, {2, -1, 0, ""}},
                         std::vector<GraphEdge>{{1, 2, 1}});
    CHECK_FALSE(is_negative_definite(intersection_matrix(degenerate)));
}

TEST_CASE("goodness of marked point data") {
    DualGraph a3 = corpus::an_chain(3);
    std::vector<PointData> pts{{"P12", {1, 2}}, {"P23", {2, 3}}};
    CHECK(check_goodness(a3, pts) == Goodness::very_good);

    DualGraph twice({{1, -3, 0, ""}, {2, -3, 0, ""}},
                    std::vector<GraphEdge>{{1, 2, 2}});
    std::vector<PointData> two_pts{{"P", {1, 2}}, {"Q", {1, 2}}};
    CHECK(check_goodness(twice, two_pts) == Goodness::good);

    DualGraph triangle({{1, -2, 0, ""}, {2, -2, 0, ""}, {3, -2, 0, ""}},
                       std::vector<GraphEdge>{{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    std::vector<PointData> triple{{"P", {1, 2, 3}}};
    CHECK(check_goodness(triangle, triple) == Goodness::neither);

    std::vector<PointData> inconsistent{{"P12", {1, 2}}};
    CHECK_THROWS_AS((void)check_goodness(a3, inconsistent), ConfigError);
}

TEST_CASE("contracting a -1 vertex") {
    DualGraph lone = corpus::chain({-1});
    CHECK(contract_vertex(lone, 1).empty());

    DualGraph mid = corpus::chain({-2, -1, -2});
    DualGraph after = contract_vertex(mid, 2);
    CHECK(after.size() == 2);
    CHECK(after.vertex(1).self_intersection == -1);
    CHECK(after.vertex(3).self_intersection == -1);
    CHECK(after.edge_multiplicity(1, 3) == 1);

    CHECK_THROWS_AS((void)contract_vertex(mid, 1), PreconditionError);
    DualGraph genus_one({{1, -1, 1, ""}}, std::vector<GraphEdge>{});
    CHECK_THROWS_AS((void)contract_vertex(genus_one, 1), PreconditionError);
}

TEST_CASE("blow-up formulas and the round trip") {
    DualGraph single = corpus::chain({-2});
    DualGraph up = blow_up(single, {1, std::nullopt});
    CHECK(up.size() == 2);
    CHECK(up.vertex(1).self_intersection == -3);
    CHECK(up.vertex(2).self_intersection == -1);
    CHECK(up.edge_multiplicity(1, 2) == 1);

    DualGraph a2 = corpus::an_chain(2);
    DualGraph up2 = blow_up(a2, {1, 2});
    CHECK(up2.vertex(1).self_intersection == -3);
    CHECK(up2.vertex(2).self_intersection == -3);
    CHECK(up2.vertex(3).self_intersection == -1);
    CHECK(up2.edge_multiplicity(1, 2) == 0);
    CHECK(up2.edge_multiplicity(1, 3) == 1);
    CHECK(up2.edge_multiplicity(2, 3) == 1);

    // contracting the fresh vertex restores the original exactly
    CHECK(contract_vertex(up2, 3) == a2);
    CHECK(contract_vertex(up, 2) == single);

    CHECK_THROWS_AS((void)blow_up(a2, {1, 3}), PreconditionError);
    DualGraph no_edge({{1, -2, 0, ""}, {2, -2, 0, ""}}, std::vector<GraphEdge>{});
    CHECK_THROWS_AS((void)blow_up(no_edge, {1, 2}), PreconditionError);
}

TEST_CASE("blow-up / contract round trips on randomized corpus graphs") {
    std::mt19937_64 rng(20260810);
    int tested = 0;
    while (tested < 25) {
        DualGraph g = corpus::random_corpus_graph(rng);
        auto edges = g.edges();
        BlowUpLocus locus;
        if (!edges.empty() && rng() % 2 == 0) {
            const auto& e = edges[rng() % edges.size()];
            locus = {e.i, e.j};
        } else {
            locus = {g.vertices()[rng() % g.size()].id, std::nullopt};
        }
        DualGraph up = blow_up(g, locus);
        std::int64_t fresh = 0;
        for (const auto& v : up.vertices()) fresh = std::max(fresh, v.id);
        CHECK(contract_vertex(up, fresh) == g);
        // blow-ups change the good resolution, not the minimal model
        CHECK(count_nr(up) == count_nr(g));
        ++tested;
    }
}

TEST_CASE("minimal models and essential components") {
    for (unsigned n = 1; n <= 10; ++n) {
        MinimalModelResult mm = minimal_model(corpus::an_chain(n));
        CHECK(mm.graph == corpus::an_chain(n));
        CHECK(mm.essential.size() == n);
        CHECK(count_nr(corpus::an_chain(n)) == n);
    }

    DualGraph m313 = corpus::chain({-3, -1, -3});
    MinimalModelResult mm = minimal_model(m313);
    CHECK(mm.graph.size() == 2);
    CHECK(mm.graph.vertex(1).self_intersection == -2);
    CHECK(mm.graph.vertex(3).self_intersection == -2);
    CHECK(mm.graph.edge_multiplicity(1, 3) == 1);
    CHECK(mm.essential == std::set<std::int64_t>{1, 3});
    CHECK(count_nr(m313) == 2);

    MinimalModelResult lone = minimal_model(corpus::chain({-1}));
    CHECK(lone.graph.empty());
    CHECK(lone.essential.empty());
    CHECK(count_nr(corpus::chain({-1})) == 0);
}

TEST_CASE("contraction is confluent on small exceptional configurations") {
    check_confluence(corpus::chain({-3, -1, -3}));
    check_confluence(corpus::chain({-2, -1, -3}));
    // two simultaneously contractible vertices hanging off one curve
    DualGraph twin({{1, -4, 0, ""}, {2, -1, 0, ""}, {3, -1, 0, ""}},
                   std::vector<GraphEdge>{{1, 2, 1}, {1, 3, 1}});
    REQUIRE(is_negative_definite(intersection_matrix(twin)));
    check_confluence(twin);
    std::mt19937_64 rng(55);
    int tested = 0;
    while (tested < 10) {
        DualGraph g = corpus::random_corpus_graph(rng);
        if (g.size() > 8) continue;
        REQUIRE(is_negative_definite(intersection_matrix(g)));
        check_confluence(g);
        ++tested;
    }
}

TEST_CASE("matrix matching") {
    DualGraph a3 = corpus::an_chain(3);
    // same chain listed in reverse
    DualGraph reversed({{1, -2, 0, "E3"}, {2, -2, 0, "E2"}, {3, -2, 0, "E1"}},
                       std::vector<GraphEdge>{{3, 2, 1}, {2, 1, 1}});
    auto match = matrices_match(a3, reversed);
    REQUIRE(match.has_value());
    CHECK(match->bijection.size() == 3);
    // the middle vertex must map to the middle vertex
    for (const auto& [a, b] : match->bijection)
        if (a == 2) CHECK(b == 2);
    CHECK(match->essential_consistent);
    CHECK(match->nr1 == match->nr2);

    // different sizes can never match
    CHECK_FALSE(matrices_match(a3, corpus::star(3)).has_value());

    // a modified diagonal breaks every permutation
    DualGraph a2 = corpus::an_chain(2);
    DualGraph modified({{1, -2, 0, ""}, {2, -3, 0, ""}},
                       std::vector<GraphEdge>{{1, 2, 1}});
    CHECK_FALSE(matrices_match(a2, modified).has_value());

    // genus participates in the match
    DualGraph genus({{1, -2, 1, ""}, {2, -2, 0, ""}},
                    std::vector<GraphEdge>{{1, 2, 1}});
    CHECK_FALSE(matrices_match(a2, genus).has_value());

    // every found match preserves essentialness and N_r
    std::mt19937_64 rng(4242);
    for (int k = 0; k < 15; ++k) {
        DualGraph g = corpus::random_corpus_graph(rng);
        if (g.size() > 10) continue;
        auto self_match = matrices_match(g, g);
        REQUIRE(self_match.has_value());
        CHECK(self_match->essential_consistent);
        CHECK(self_match->nr1 == self_match->nr2);
    }

    DualGraph big = corpus::an_chain(11);
    CHECK_THROWS_AS((void)matrices_match(big, big), ResourceLimitError);
}

TEST_CASE("family invariance report") {
    FamilyInvarianceReport same =
        family_invariance_check(corpus::an_chain(2), corpus::an_chain(2));
    CHECK(same.matched);
    CHECK(same.nr_special == 2);
    CHECK(same.nr_generic == 2);
    CHECK(same.nr_equal);

    FamilyInvarianceReport sizes =
        family_invariance_check(corpus::an_chain(2), corpus::an_chain(3));
    CHECK_FALSE(sizes.matched);
    CHECK(sizes.mismatch_reason.find("vertex count") != std::string::npos);

    // different good resolutions of the same singularity: no match at the
    // resolution level, but the minimal models agree
    FamilyInvarianceReport blown =
        family_invariance_check(corpus::chain({-3, -1, -3}), corpus::an_chain(2));
    CHECK_FALSE(blown.matched);
    CHECK(blown.nr_special == 2);
    CHECK(blown.nr_generic == 2);
    CHECK(blown.nr_equal);
}

TEST_CASE("graph structural validation") {
    CHECK_THROWS_AS(
        DualGraph({{1, -2, 0, ""}, {1, -3, 0, ""}}, std::vector<GraphEdge>{}),
        StructuralError);
    CHECK_THROWS_AS(DualGraph({{1, -2, 0, ""}}, std::vector<GraphEdge>{{1, 1, 1}}),
                    StructuralError);
    CHECK_THROWS_AS(DualGraph({{1, -2, 0, ""}}, std::vector<GraphEdge>{{1, 2, 1}}),
                    StructuralError);
    DualGraph merged({{1, -2, 0, ""}, {2, -2, 0, ""}},
                     std::vector<GraphEdge>{{1, 2, 1}, {2, 1, 1}});
    CHECK(merged.edge_multiplicity(1, 2) == 2);
    CHECK(corpus::an_chain(4).is_connected());
    DualGraph split({{1, -2, 0, ""}, {2, -2, 0, ""}}, std::vector<GraphEdge>{});
    CHECK_FALSE(split.is_connected());
}
