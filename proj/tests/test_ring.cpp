#include <doctest.h>

#include <random>

#include "arcsmith/errors.hpp"
#include "arcsmith/ring.hpp"

using namespace arcsmith;

namespace {

Scalar random_scalar(const CoefficientRing& ring, std::mt19937_64& rng) {
    const long n = static_cast<long>(rng() % 201) - 100;
    switch (ring.kind()) {
    case CoefficientRing::Kind::integers:
    case CoefficientRing::Kind::prime_field:
        return ring.from_int(n);
    case CoefficientRing::Kind::rationals: {
        long d = static_cast<long>(rng() % 19) + 1;
        return ring.div(ring.from_int(n), ring.from_int(d));
    }
    case CoefficientRing::Kind::localized_integers: {
        long d;
        do {
            d = static_cast<long>(rng() % 19) + 1;
        } while (d % static_cast<long>(ring.prime()) == 0);
        return ring.div(ring.from_int(n), ring.from_int(d));
    }
    }
    return ring.zero();
}

} // namespace

TEST_CASE("ring specs parse and print") {
    CHECK(CoefficientRing::parse("ZZ").description() == "ZZ");
    CHECK(CoefficientRing::parse("QQ").description() == "QQ");
    CHECK(CoefficientRing::parse("GF(5)").description() == "GF(5)");
    CHECK(CoefficientRing::parse("ZZ_(3)").description() == "ZZ_(3)");
    CHECK_THROWS_AS((void)CoefficientRing::parse("GF(x)"), ParseError);
    CHECK_THROWS_AS((void)CoefficientRing::parse("FF"), ParseError);
}

TEST_CASE("prime moduli are validated") {
    CHECK_THROWS_AS((void)CoefficientRing::prime_field(4), PreconditionError);
    CHECK_THROWS_AS((void)CoefficientRing::prime_field(1), PreconditionError);
    CHECK_THROWS_AS((void)CoefficientRing::localized_integers(6), PreconditionError);
    CHECK_NOTHROW((void)CoefficientRing::prime_field(2));
    CHECK_NOTHROW((void)CoefficientRing::prime_field(1000003));
}

TEST_CASE("element literals") {
    auto Z = CoefficientRing::integers();
    auto Q = CoefficientRing::rationals();
    auto F5 = CoefficientRing::prime_field(5);
    auto Z5 = CoefficientRing::localized_integers(5);

    CHECK(Z.str(Z.from_string("-12")) == "-12");
    CHECK(Q.str(Q.from_string("4/6")) == "2/3");
    CHECK(F5.str(F5.from_string("-1")) == "4");
    CHECK(F5.str(F5.from_string("7")) == "2");
    CHECK(Z5.str(Z5.from_string("2/3")) == "2/3");
    CHECK_THROWS_AS((void)Z5.from_string("1/5"), PreconditionError);
    CHECK_THROWS_AS((void)Z5.from_string("3/10"), PreconditionError);
    CHECK_THROWS_AS((void)Z.from_string("abc"), ParseError);
}

TEST_CASE("units and division") {
    auto Z = CoefficientRing::integers();
    auto F7 = CoefficientRing::prime_field(7);
    auto Z5 = CoefficientRing::localized_integers(5);

    CHECK(Z.div(Z.from_int(6), Z.from_int(3)) == Z.from_int(2));
    CHECK_THROWS_AS((void)Z.div(Z.from_int(7), Z.from_int(3)), PreconditionError);
    CHECK_THROWS_AS((void)Z.inv(Z.from_int(2)), PreconditionError);
    CHECK(Z.inv(Z.from_int(-1)) == Z.from_int(-1));

    CHECK(F7.mul(F7.inv(F7.from_int(3)), F7.from_int(3)) == F7.one());
    CHECK_THROWS_AS((void)F7.inv(F7.zero()), PreconditionError);

    CHECK(Z5.inv(Z5.from_string("2/3")) == Z5.from_string("3/2"));
    CHECK_THROWS_AS((void)Z5.inv(Z5.from_int(5)), PreconditionError);
}

TEST_CASE("canonical coefficient maps") {
    auto Z = CoefficientRing::integers();
    auto Q = CoefficientRing::rationals();
    auto F5 = CoefficientRing::prime_field(5);
    auto Z5 = CoefficientRing::localized_integers(5);
    auto Z3 = CoefficientRing::localized_integers(3);

    CHECK(has_coefficient_hom(Z, F5));
    CHECK(has_coefficient_hom(Z, Q));
    CHECK(has_coefficient_hom(Z, Z5));
    CHECK(has_coefficient_hom(Z5, F5));
    CHECK(has_coefficient_hom(Z5, Q));
    CHECK_FALSE(has_coefficient_hom(Q, F5));
    CHECK_FALSE(has_coefficient_hom(Z3, F5));
    CHECK_FALSE(has_coefficient_hom(F5, Z));

    CHECK(map_scalar(Z, F5, Z.from_int(7)) == F5.from_int(2));
    CHECK(map_scalar(Z, F5, Z.from_int(-1)) == F5.from_int(4));
    // 1/3 mod 5: the inverse of 3 is 2
    CHECK(map_scalar(Z5, F5, Z5.from_string("1/3")) == F5.from_int(2));
    CHECK(map_scalar(Z5, Q, Z5.from_string("2/3")) == Q.from_string("2/3"));
    CHECK_THROWS_AS((void)map_scalar(Q, F5, Q.one()), UnsupportedMapError);
}

TEST_CASE("ring axioms hold on random samples") {
    std::mt19937_64 rng(20260810);
    for (const auto& ring :
         {CoefficientRing::integers(), CoefficientRing::rationals(),
          CoefficientRing::prime_field(5), CoefficientRing::localized_integers(7)}) {
        for (int k = 0; k < 300; ++k) {
            Scalar a = random_scalar(ring, rng);
            Scalar b = random_scalar(ring, rng);
            Scalar c = random_scalar(ring, rng);
            CHECK(ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)));
            CHECK(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)));
            CHECK(ring.add(a, b) == ring.add(b, a));
            CHECK(ring.mul(a, b) == ring.mul(b, a));
            CHECK(ring.mul(a, ring.add(b, c)) ==
                  ring.add(ring.mul(a, b), ring.mul(a, c)));
            CHECK(ring.add(a, ring.neg(a)) == ring.zero());
        }
    }
}

TEST_CASE("coefficient maps are ring homomorphisms on random pairs") {
    std::mt19937_64 rng(77);
    struct Pair {
        CoefficientRing from, to;
    };
    const Pair pairs[] = {
        {CoefficientRing::integers(), CoefficientRing::prime_field(5)},
        {CoefficientRing::integers(), CoefficientRing::rationals()},
        {CoefficientRing::integers(), CoefficientRing::localized_integers(3)},
        {CoefficientRing::localized_integers(5), CoefficientRing::prime_field(5)},
        {CoefficientRing::localized_integers(5), CoefficientRing::rationals()},
    };
    for (const auto& [from, to] : pairs) {
        for (int k = 0; k < 1000; ++k) {
            Scalar a = random_scalar(from, rng);
            Scalar b = random_scalar(from, rng);
            CHECK(map_scalar(from, to, from.add(a, b)) ==
                  to.add(map_scalar(from, to, a), map_scalar(from, to, b)));
            CHECK(map_scalar(from, to, from.mul(a, b)) ==
                  to.mul(map_scalar(from, to, a), map_scalar(from, to, b)));
        }
        CHECK(map_scalar(from, to, from.one()) == to.one());
    }
}
