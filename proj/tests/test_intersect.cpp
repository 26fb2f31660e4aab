#include <doctest.h>

#include "arcsmith/errors.hpp"
#include "arcsmith/intersect.hpp"
#include "arcsmith/parse.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace arcsmith;

namespace {

const std::vector<std::string> kXY{"x", "y"};

LocalPair pair_of(const std::string& f, const std::string& g,
                  const CoefficientRing& field) {
    return {field, parse_polynomial(f, field, kXY),
            parse_polynomial(g, field, kXY)};
}

// cross-check a (f, linear g) pair against the series-substitution oracle
void check_against_line_oracle(const std::string& f, const std::string& g,
                               const CoefficientRing& field) {
    LocalPair p = pair_of(f, g, field);
    MultiplicityResult r = local_intersection_multiplicity(p, 16);
    auto expected = oracles::order_on_line(p.f, p.g, 24);
    if (expected.has_value()) {
        REQUIRE(r.isolated);
        CHECK(r.multiplicity == *expected);
    } else {
        CHECK_FALSE(r.isolated);
    }
}

} // namespace

TEST_CASE("plane-germ multiplicities at the origin") {
    auto Q = corpus::QQ();
    MultiplicityResult transversal =
        local_intersection_multiplicity(pair_of("x", "y", Q), 8);
    REQUIRE(transversal.isolated);
    CHECK(transversal.multiplicity == 1);

    MultiplicityResult tangent =
        local_intersection_multiplicity(pair_of("y", "y - x^2", Q), 8);
    REQUIRE(tangent.isolated);
    CHECK(tangent.multiplicity == 2);

    MultiplicityResult cusp =
        local_intersection_multiplicity(pair_of("y", "y^2 - x^3", Q), 8);
    REQUIRE(cusp.isolated);
    CHECK(cusp.multiplicity == 3);

    MultiplicityResult shared =
        local_intersection_multiplicity(pair_of("y", "x*y", Q), 8);
    CHECK_FALSE(shared.isolated);
}

TEST_CASE("series-substitution oracle agrees") {
    auto Q = corpus::QQ();
    check_against_line_oracle("x", "y", Q);
    check_against_line_oracle("y - x^2", "y", Q);
    check_against_line_oracle("y^2 - x^3", "y", Q);
    check_against_line_oracle("x*y", "y", Q);
    check_against_line_oracle("y^2 - x^5", "y", Q);
    check_against_line_oracle("x^3 + y^3 + x*y", "x + 2*y", Q);
    check_against_line_oracle("y^2 - x^3", "y", corpus::GF(7));
}

TEST_CASE("symmetry in the two germs") {
    auto Q = corpus::QQ();
    const char* pairs[][2] = {{"x", "y"},
                              {"y", "y - x^2"},
                              {"y", "y^2 - x^3"},
                              {"x*y", "x^2 - y^2"},
                              {"y - x^2", "y + x^2"}};
    for (const auto& [f, g] : pairs) {
        MultiplicityResult a = local_intersection_multiplicity(pair_of(f, g, Q), 12);
        MultiplicityResult b = local_intersection_multiplicity(pair_of(g, f, Q), 12);
        CHECK(a.isolated == b.isolated);
        if (a.isolated) CHECK(a.multiplicity == b.multiplicity);
    }
}

TEST_CASE("transversal tangent cones multiply") {
    auto Q = corpus::QQ();
    // lowest forms x and y: 1*1
    CHECK(local_intersection_multiplicity(pair_of("x + y^2", "y + x^3", Q), 12)
              .multiplicity == 1);
    // lowest forms x*y and x^2 - y^2: no common factor, 2*2
    CHECK(local_intersection_multiplicity(pair_of("x*y", "x^2 - y^2", Q), 12)
              .multiplicity == 4);
    // lowest forms x and y^2: 1*2
    CHECK(local_intersection_multiplicity(pair_of("x", "y^2 - x^3", Q), 12)
              .multiplicity == 2);
    // shared tangent line y: the tangency pushes past the product 1*1
    CHECK(local_intersection_multiplicity(pair_of("y - x^2", "y + x^2", Q), 12)
              .multiplicity == 2);
}

TEST_CASE("preconditions") {
    auto Q = corpus::QQ();
    auto Z = corpus::ZZ();
    LocalPair off_origin{Q, parse_polynomial("x + 1", Q, kXY),
                         parse_polynomial("y", Q, kXY)};
    CHECK_THROWS_AS((void)local_intersection_multiplicity(off_origin, 8),
                    PreconditionError);
    LocalPair not_field{Z, parse_polynomial("x", Z, kXY),
                        parse_polynomial("y", Z, kXY)};
    CHECK_THROWS_AS((void)local_intersection_multiplicity(not_field, 8),
                    PreconditionError);
    CHECK_THROWS_AS(
        (void)local_intersection_multiplicity(pair_of("x", "y", Q), 0),
        PreconditionError);
}

TEST_CASE("pairwise totals") {
    auto Q = corpus::QQ();
    std::vector<LabeledPair> two{{"P1", pair_of("x", "y", Q)},
                                 {"P2", pair_of("x", "y", Q)}};
    CHECK(pairwise_total_intersection(two, 8) == 2);

    std::vector<LabeledPair> mixed{{"P1", pair_of("y", "y - x^2", Q)},
                                   {"P2", pair_of("x", "y", Q)}};
    CHECK(pairwise_total_intersection(mixed, 8) == 3);

    CHECK(pairwise_total_intersection({}, 8) == 0);

    std::vector<LabeledPair> bad{{"P1", pair_of("x", "y", Q)},
                                 {"Pbad", pair_of("y", "x*y", Q)}};
    try {
        (void)pairwise_total_intersection(bad, 8);
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("Pbad") != std::string::npos);
    }
}
