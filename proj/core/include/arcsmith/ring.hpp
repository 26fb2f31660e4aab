#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace arcsmith {

// Element of a coefficient ring. The payload alternative is fixed by the
// ring that produced it: Integers -> mpz_class, Rationals and
// LocalizedIntegers -> mpq_class, PrimeField -> uint64_t in [0, p).
// Scalars are immutable values; all arithmetic goes through CoefficientRing.
class Scalar {
public:
    Scalar() : v_(std::uint64_t{0}) {}
    explicit Scalar(mpz_class z) : v_(std::move(z)) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(std::uint64_t r) : v_(r) {}

    bool holds_integer() const { return std::holds_alternative<mpz_class>(v_); }
    bool holds_rational() const { return std::holds_alternative<mpq_class>(v_); }
    bool holds_residue() const { return std::holds_alternative<std::uint64_t>(v_); }

    const mpz_class& integer() const { return std::get<mpz_class>(v_); }
    const mpq_class& rational() const { return std::get<mpq_class>(v_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }

    bool operator==(const Scalar& other) const { return v_ == other.v_; }

private:
    std::variant<mpz_class, mpq_class, std::uint64_t> v_;
};

// One of the supported coefficient rings:
//   Integers            ZZ
//   Rationals           QQ
//   PrimeField(p)       GF(p), p prime
//   LocalizedIntegers(p) ZZ_(p): rationals whose denominator is coprime to p.
// ZZ_(p) is the DVR with residue field GF(p) and fraction field QQ; it models
// the one-parameter base over which families are specialized.
class CoefficientRing {
public:
    enum class Kind { integers, rationals, prime_field, localized_integers };

    static CoefficientRing integers();
    static CoefficientRing rationals();
    static CoefficientRing prime_field(std::uint64_t p);
    static CoefficientRing localized_integers(std::uint64_t p);

    // Parses "ZZ", "QQ", "GF(p)", "ZZ_(p)".
    static CoefficientRing parse(std::string_view spec);

    Kind kind() const { return kind_; }
    std::uint64_t prime() const { return p_; }
    bool is_field() const {
        return kind_ == Kind::rationals || kind_ == Kind::prime_field;
    }
    std::string description() const;

    bool operator==(const CoefficientRing& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long n) const;
    // Accepts the canonical element text: "-3", "4/7" (QQ and ZZ_(p) only).
    Scalar from_string(std::string_view text) const;
    std::string str(const Scalar& a) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    // Multiplicative inverse; throws PreconditionError when a is not a unit.
    Scalar inv(const Scalar& a) const;
    // Exact division a / b; throws PreconditionError when impossible in this ring.
    Scalar div(const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

    // Payload alternative matches this ring and ring invariants hold
    // (residues reduced mod p, ZZ_(p) denominators coprime to p).
    bool contains(const Scalar& a) const;

private:
    CoefficientRing(Kind k, std::uint64_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

// The canonical coefficient homomorphisms:
//   identity on every ring,
//   ZZ -> QQ, ZZ -> GF(p), ZZ -> ZZ_(p)   (ZZ is initial),
//   ZZ_(p) -> GF(p)  (residue map),  ZZ_(p) -> QQ  (fraction field).
// Everything else (e.g. QQ -> GF(p)) has no canonical map.
bool has_coefficient_hom(const CoefficientRing& from, const CoefficientRing& to);

// Applies the canonical homomorphism; throws UnsupportedMapError when absent.
Scalar map_scalar(const CoefficientRing& from, const CoefficientRing& to,
                  const Scalar& a);

} // namespace arcsmith
