#include <doctest.h>

#include "arcsmith/count.hpp"
#include "arcsmith/errors.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace arcsmith;

TEST_CASE("A_1 point counts over GF(2) match the enumeration oracle") {
    // expected values frozen from the independent oracle
    CHECK(oracles::a1_level1_solution_count(2) == 8);
    CHECK(oracles::a1_level2_solution_count(2) == 32);

    NiceTriplePresentation a1 = base_change(corpus::an_triple(1), corpus::GF(2));
    CHECK(count_points(generate_jet_system(a1, 1)).count == 8);
    CHECK(count_points(generate_jet_system(a1, 2)).count == 32);
}

TEST_CASE("the smooth triple has exactly one jet at every level") {
    NiceTriplePresentation smooth =
        base_change(corpus::smooth_line(), corpus::GF(3));
    for (std::size_t m = 1; m <= 4; ++m)
        CHECK(count_points(generate_jet_system(smooth, m)).count == 1);
}

TEST_CASE("counting requires a prime field") {
    JetSystem js = generate_jet_system(corpus::an_triple(1), 2); // over ZZ
    CHECK_THROWS_AS((void)count_points(js), StructuralError);
}

TEST_CASE("the enumeration cap is enforced") {
    NiceTriplePresentation a1 = base_change(corpus::an_triple(1), corpus::GF(2));
    JetSystem js = generate_jet_system(a1, 2); // grid 2^6 = 64
    CountOptions tight;
    tight.exhaustive_limit = 10;
    CHECK_THROWS_AS((void)count_points(js, tight), ResourceLimitError);
}

TEST_CASE("worker partition does not change the count") {
    NiceTriplePresentation a2 = base_change(corpus::an_triple(2), corpus::GF(3));
    JetSystem js = generate_jet_system(a2, 2); // grid 3^6 = 729
    CountOptions one, four;
    one.threads = 1;
    four.threads = 4;
    CHECK(count_points(js, one).count == count_points(js, four).count);
}

TEST_CASE("sampled estimates are deterministic in the seed") {
    NiceTriplePresentation a1 = base_change(corpus::an_triple(1), corpus::GF(2));
    JetSystem js = generate_jet_system(a1, 2);
    CountResult r1 = count_points_sampled(js, 4000, 99);
    CountResult r2 = count_points_sampled(js, 4000, 99);
    CHECK(r1.hits == r2.hits);
    CHECK(r1.estimate == r2.estimate);
    // true count is 32 of 64; the estimate should land in the right region
    CHECK(r1.estimate > 20.0);
    CHECK(r1.estimate < 44.0);
    CHECK(r1.ci_low <= r1.estimate);
    CHECK(r1.ci_high >= r1.estimate);

    CountOptions one, four;
    one.threads = 1;
    four.threads = 4;
    CHECK(count_points_sampled(js, 2000, 5, one).hits ==
          count_points_sampled(js, 2000, 5, four).hits);
}

TEST_CASE("dimension probe table") {
    NiceTriplePresentation a1 = corpus::an_triple(1);
    const std::uint64_t primes[] = {2};
    const std::size_t levels[] = {1, 2};
    DimensionProbe probe = dimension_probe(a1, primes, levels);
    REQUIRE(probe.rows.size() == 2);
    CHECK(probe.rows[0].log_q == 3.0); // log_2 8
    CHECK(probe.rows[1].log_q == 5.0); // log_2 32
    REQUIRE(probe.rows[1].delta_vs_prev_level.has_value());
    CHECK(*probe.rows[1].delta_vs_prev_level == 2.0);

    DimensionProbe empty = dimension_probe(a1, {}, {});
    CHECK(empty.rows.empty());
}
