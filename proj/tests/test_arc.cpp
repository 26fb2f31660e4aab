#include <doctest.h>

#include <random>

#include "arcsmith/arc.hpp"
#include "arcsmith/condition_no.hpp"
#include "arcsmith/errors.hpp"
#include "arcsmith/parse.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace arcsmith;

namespace {

Arc frame_arc(const std::string& list, const CoefficientRing& field,
              std::size_t prec) {
    return Arc(field, prec, parse_series_list(list, field, "t", prec));
}

} // namespace

TEST_CASE("wedge_from_arc sends u to u*t and keeps the arc components") {
    auto Q = corpus::QQ();
    ChartFrame frame = corpus::an_chart_first(1, corpus::ZZ());

    Arc arc = frame_arc("0, t^2, t^3", Q, 4);
    Wedge w = wedge_from_arc(arc, frame);
    REQUIRE(w.components().size() == 3);
    CHECK(w.components()[0].coeff(1, 1) == Q.one());
    CHECK(w.components()[0].str() == "u*t");
    CHECK(w.components()[1].at_u_zero() == arc.components()[1]);
    CHECK(w.components()[2].at_u_zero() == arc.components()[2]);

    Wedge w2 = wedge_from_arc(frame_arc("0, 0, t", Q, 4), frame);
    CHECK(w2.components()[1].is_zero());

    auto F5 = corpus::GF(5);
    Wedge w3 = wedge_from_arc(frame_arc("0, t, t", F5, 4), frame);
    CHECK(w3.components()[0].str() == "u*t");

    // an arc outside the special fiber is rejected
    CHECK_THROWS_AS((void)wedge_from_arc(frame_arc("t, t^2, t^3", Q, 4), frame),
                    PreconditionError);
}

TEST_CASE("specialize_at_zero") {
    auto Q = corpus::QQ();
    ChartFrame frame = corpus::an_chart_first(1, corpus::ZZ());

    Arc arc = frame_arc("0, t^2, t^3", Q, 4);
    CHECK(specialize_at_zero(wedge_from_arc(arc, frame)) == arc);

    // a wedge with u-degrees beyond 1: (u^2 t + u t^2, t, 0)
    BiSeries mixed = BiSeries::monomial(Q, 4, 4, 2, 1, Q.one()) +
                     BiSeries::monomial(Q, 4, 4, 1, 2, Q.one());
    Wedge w(Q, 4, 4,
            {mixed, BiSeries::from_t_series(parse_series("t", Q, "t", 4), 4),
             BiSeries(Q, 4, 4)});
    Arc back = specialize_at_zero(w);
    CHECK(back == frame_arc("0, t, 0", Q, 4));
}

TEST_CASE("generic_fiber_witness certifies the lowest u-term") {
    auto Q = corpus::QQ();
    ChartFrame frame = corpus::an_chart_first(1, corpus::ZZ());

    Wedge w = wedge_from_arc(frame_arc("0, t^2, t^3", Q, 4), frame);
    GenericFiberWitness gw = generic_fiber_witness(w);
    CHECK(gw.in_generic_fiber);
    CHECK(gw.lowest_term == "u*t");

    Wedge flat(Q, 4, 4,
               {BiSeries(Q, 4, 4),
                BiSeries::from_t_series(parse_series("t^2", Q, "t", 4), 4),
                BiSeries::from_t_series(parse_series("t^3", Q, "t", 4), 4)});
    CHECK_FALSE(generic_fiber_witness(flat).in_generic_fiber);

    Wedge high(Q, 4, 4,
               {BiSeries::monomial(Q, 4, 4, 3, 2, Q.one()),
                BiSeries::from_t_series(parse_series("t", Q, "t", 4), 4),
                BiSeries::from_t_series(parse_series("t", Q, "t", 4), 4)});
    GenericFiberWitness gh = generic_fiber_witness(high);
    CHECK(gh.in_generic_fiber);
    CHECK(gh.lowest_term == "u^3*t^2");
}

TEST_CASE("contact_order") {
    auto Q = corpus::QQ();
    const std::vector<std::string> vars{"Y1", "Y2", "Y3"};
    SparsePoly g = parse_polynomial("Y1*Y2 - Y3^2", Q, vars);

    Arc on_surface(Q, 5, parse_series_list("t, t, t", Q, "t", 5));
    CHECK_FALSE(contact_order(on_surface, g).has_value()); // >= N+1

    Arc off_surface(Q, 5, parse_series_list("t, 2*t, t", Q, "t", 5));
    CHECK(contact_order(off_surface, g) == 2);

    Arc plane(Q, 5, parse_series_list("t^2, t^3", Q, "t", 5));
    const std::vector<std::string> two_vars{"Y1", "Y2"};
    SparsePoly y1 = parse_polynomial("Y1", Q, two_vars);
    CHECK(contact_order(plane, y1) == 2);
}

TEST_CASE("wedge laws on seeded random S-arcs") {
    std::mt19937_64 rng(1234);
    ChartFrame frame = corpus::an_chart_first(1, corpus::ZZ());
    for (const auto& field : {corpus::QQ(), corpus::GF(5)}) {
        for (int k = 0; k < 500; ++k) {
            Arc a = corpus::random_frame_arc(rng, field, 6);
            REQUIRE(a.is_s_arc());
            Wedge w = wedge_from_arc(a, frame);
            CHECK(specialize_at_zero(w) == a);
            CHECK(generic_fiber_witness(w).in_generic_fiber);
        }
    }
}

TEST_CASE("surface residuals survive the wedge round trip") {
    // an arc that satisfies the relations to precision N keeps doing so after
    // wedge + specialize + chart map
    std::mt19937_64 rng(987);
    auto F5 = corpus::GF(5);
    ChartFrame frame = corpus::an_chart_first(1, F5);
    NiceTriplePresentation a1 = corpus::an_triple(1, F5);
    const std::size_t prec = 6;

    for (int k = 0; k < 200; ++k) {
        Arc chart = corpus::random_frame_arc(rng, F5, prec);
        Arc back = specialize_at_zero(wedge_from_arc(chart, frame));
        std::vector<TruncatedSeries> surface;
        for (const auto& h : frame.to_surface)
            surface.push_back(evaluate_at_series(h, back.components()));
        Arc on_surface(F5, prec, surface);
        for (const auto& f : a1.relations())
            CHECK_FALSE(contact_order(on_surface, f.reduce_coefficients(F5))
                            .has_value());
    }
}

TEST_CASE("condition-(NO) sampling on the A_1 family at p=2, m=2") {
    NiceTriplePresentation fam = corpus::a1_family(2);
    auto Z2 = fam.ring();
    std::vector<ChartFrame> frames{corpus::an_chart_first(1, Z2),
                                   corpus::an_chart_second(1, Z2)};

    // frozen oracle: 32 of the 64 grid points solve A11*A21 - A31^2 = 0
    CHECK(oracles::a1_level2_solution_count(2) == 32);

    ConditionNoEvidence e = sample_condition_no(fam, 2, 2, 100, frames, 7);
    CHECK(e.attempted == 32);
    CHECK(e.exhaustive);
    CHECK(e.grid_points_checked == 64);
    CHECK(e.lifted > 0);
    CHECK(e.lifted <= e.attempted);
    CHECK(std::string(ConditionNoEvidence::kDisclaimer).find("not a proof") !=
          std::string::npos);

    // the all-zero jet and the diagonal jet 11/21/31 = 1 both lift
    REQUIRE_FALSE(e.examples.empty());
    CHECK(e.examples[0].lifted); // the zero arc is the first solution visited

    // a budget cuts processing short
    ConditionNoEvidence cut = sample_condition_no(fam, 2, 2, 5, frames, 7);
    CHECK(cut.attempted == 5);
    CHECK_FALSE(cut.exhaustive);

    // budget 0 gives an empty report
    ConditionNoEvidence empty = sample_condition_no(fam, 2, 2, 0, frames, 7);
    CHECK(empty.attempted == 0);
    CHECK(empty.lifted == 0);

    CHECK_THROWS_AS(
        (void)sample_condition_no(fam, 2, 2, 10, std::span<const ChartFrame>{}, 7),
        ConfigError);
    CHECK_THROWS_AS((void)sample_condition_no(fam, 2, 3, 10, frames, 7),
                    ConfigError);
}

TEST_CASE("condition-(NO) sampling lifts every smooth-triple jet") {
    auto Z3 = corpus::ZZloc(3);
    NiceTriplePresentation fam(
        Z3, 1, {parse_polynomial("Y1", Z3, {std::vector<std::string>{"Y1"}})},
        "smooth-family");
    std::vector<ChartFrame> frames{corpus::smooth_chart(Z3)};
    ConditionNoEvidence e = sample_condition_no(fam, 1, 3, 10, frames, 1);
    CHECK(e.attempted == 1); // only the zero jet solves A11 = 0
    CHECK(e.lifted == 1);
    CHECK(e.exhaustive);
}
