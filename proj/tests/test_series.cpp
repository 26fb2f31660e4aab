#include <doctest.h>

#include <random>

#include "arcsmith/errors.hpp"
#include "arcsmith/parse.hpp"
#include "arcsmith/series.hpp"

#include "corpus.hpp"

using namespace arcsmith;

namespace {

TruncatedSeries s(const std::string& src, const CoefficientRing& ring,
                  std::size_t prec) {
    return parse_series(src, ring, "t", prec);
}

} // namespace

TEST_CASE("truncated multiplication drops high orders") {
    auto Q = corpus::QQ();
    CHECK((s("t", Q, 1) * s("t", Q, 1)).is_zero());
    CHECK(s("1 + t", Q, 2) * s("1 - t", Q, 2) == s("1 - t^2", Q, 2));
    CHECK(s("t + t^2", Q, 3) * s("t + t^2", Q, 3) == s("t^2 + 2*t^3", Q, 3));
}

TEST_CASE("precision and ring mismatches are structural errors") {
    auto Q = corpus::QQ();
    CHECK_THROWS_AS((void)(s("t", Q, 2) * s("t", Q, 3)), StructuralError);
    CHECK_THROWS_AS((void)(s("t", Q, 2) + s("t", corpus::GF(5), 2)),
                    StructuralError);
}

TEST_CASE("order of vanishing") {
    auto Q = corpus::QQ();
    CHECK(s("t^2 + t^3", Q, 4).order() == 2);
    CHECK(s("1", Q, 4).order() == 0);
    CHECK_FALSE(s("0", Q, 4).order().has_value());
    CHECK(s("t^2", Q, 4).has_zero_constant_term());
}

TEST_CASE("series agree with polynomial multiplication after truncation") {
    std::mt19937_64 rng(5150);
    auto F5 = corpus::GF(5);
    const std::vector<std::string> tvar{"t"};
    std::uniform_int_distribution<int> coeff(0, 4);
    for (int k = 0; k < 200; ++k) {
        const std::size_t prec = 1 + rng() % 6;
        // random univariate polynomials of degree <= prec
        std::vector<SparsePoly::Term> ta, tb;
        for (std::size_t d = 0; d <= prec; ++d) {
            ta.push_back({{static_cast<std::uint32_t>(d)}, F5.from_int(coeff(rng))});
            tb.push_back({{static_cast<std::uint32_t>(d)}, F5.from_int(coeff(rng))});
        }
        SparsePoly pa = SparsePoly::from_terms(F5, 1, ta);
        SparsePoly pb = SparsePoly::from_terms(F5, 1, tb);
        SparsePoly product = pa * pb;

        auto to_series = [&](const SparsePoly& p) {
            std::vector<Scalar> c(prec + 1, F5.zero());
            for (const auto& t : p.terms())
                if (t.exps[0] <= prec) c[t.exps[0]] = t.coeff;
            return TruncatedSeries::from_coeffs(F5, prec, std::move(c));
        };
        CHECK(to_series(pa) * to_series(pb) == to_series(product));
    }
}

TEST_CASE("series division") {
    auto Q = corpus::QQ();
    auto q1 = series_div(s("t^2 + t^3", Q, 4), s("t", Q, 4));
    REQUIRE(q1.has_value());
    CHECK(*q1 == s("t + t^2", Q, 3));

    // dividing by a higher order is impossible
    CHECK_FALSE(series_div(s("t", Q, 4), s("t^2", Q, 4)).has_value());

    // 0/0 picks the zero representative
    auto q2 = series_div(s("0", Q, 4), s("0", Q, 4));
    REQUIRE(q2.has_value());
    CHECK(q2->is_zero());

    // unit division round-trips at the quotient precision
    auto q3 = series_div(s("t + 2*t^2 - t^4", Q, 4), s("1 + t", Q, 4));
    REQUIRE(q3.has_value());
    CHECK((*q3 * s("1 + t", Q, 4).truncated(q3->precision())) ==
          s("t + 2*t^2 - t^4", Q, 4).truncated(q3->precision()));

    // nonzero / zero fails
    CHECK_FALSE(series_div(s("t", Q, 4), s("0", Q, 4)).has_value());
}

TEST_CASE("bivariate series basics") {
    auto Q = corpus::QQ();
    BiSeries ut = BiSeries::monomial(Q, 3, 3, 1, 1, Q.one());
    BiSeries u2t2 = ut * ut;
    CHECK(u2t2.coeff(2, 2) == Q.one());
    CHECK((ut * ut * ut * ut).is_zero()); // u^4 t^4 beyond precision

    CHECK(ut.at_u_zero().is_zero());
    TruncatedSeries phi = parse_series("t^2 + t^3", Q, "t", 3);
    BiSeries embedded = BiSeries::from_t_series(phi, 3);
    CHECK(embedded.at_u_zero() == phi);

    auto low = (ut + u2t2).lowest_term();
    REQUIRE(low.has_value());
    CHECK(low->first == 1);
    CHECK(low->second == 1);
    CHECK((ut + u2t2).str() == "u*t + u^2*t^2");
}
