#include "arcsmith/ring.hpp"

#include <cstdlib>

#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

// p prime, a != 0 mod p
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t p) {
    mpz_class n(0);
    mpz_import(n.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
    if (p <= 0xFFFFFFFFull) {
        unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
        return r;
    }
    mpz_class pz(0), r;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

bool denominator_coprime_to(const mpq_class& q, std::uint64_t p) {
    return mpz_mod_u64(q.get_den(), p) != 0;
}

[[noreturn]] void bad_payload(const char* ring) {
    throw StructuralError(std::string("scalar payload does not belong to ") + ring);
}

} // namespace

CoefficientRing CoefficientRing::integers() {
    return CoefficientRing(Kind::integers, 0);
}

CoefficientRing CoefficientRing::rationals() {
    return CoefficientRing(Kind::rationals, 0);
}

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw PreconditionError("GF(p) requires a prime modulus, got " + std::to_string(p));
    return CoefficientRing(Kind::prime_field, p);
}

CoefficientRing CoefficientRing::localized_integers(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw PreconditionError("ZZ_(p) requires a prime p, got " + std::to_string(p));
    return CoefficientRing(Kind::localized_integers, p);
}

CoefficientRing CoefficientRing::parse(std::string_view spec) {
    if (spec == "ZZ") return integers();
    if (spec == "QQ") return rationals();
    auto parse_prime = [&](std::string_view inner) -> std::uint64_t {
        if (inner.empty()) throw ParseError("missing prime in ring spec", 1);
        std::uint64_t p = 0;
        for (char c : inner) {
            if (c < '0' || c > '9')
                throw ParseError("bad prime in ring spec: " + std::string(inner), 1);
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return p;
    };
    if (spec.starts_with("GF(") && spec.ends_with(")"))
        return prime_field(parse_prime(spec.substr(3, spec.size() - 4)));
    if (spec.starts_with("ZZ_(") && spec.ends_with(")"))
        return localized_integers(parse_prime(spec.substr(4, spec.size() - 5)));
    throw ParseError("unknown ring spec: " + std::string(spec) +
                         " (expected ZZ, QQ, GF(p) or ZZ_(p))",
                     1);
}

std::string CoefficientRing::description() const {
    switch (kind_) {
    case Kind::integers: return "ZZ";
    case Kind::rationals: return "QQ";
    case Kind::prime_field: return "GF(" + std::to_string(p_) + ")";
    case Kind::localized_integers: return "ZZ_(" + std::to_string(p_) + ")";
    }
    return "?";
}

Scalar CoefficientRing::zero() const { return from_int(0); }

Scalar CoefficientRing::one() const { return from_int(1); }

Scalar CoefficientRing::from_int(long n) const {
    switch (kind_) {
    case Kind::integers: return Scalar(mpz_class(n));
    case Kind::rationals:
    case Kind::localized_integers: return Scalar(mpq_class(n));
    case Kind::prime_field: {
        mpz_class z(n);
        return Scalar(mpz_mod_u64(z, p_));
    }
    }
    return Scalar();
}

Scalar CoefficientRing::from_string(std::string_view text) const {
    std::string s(text);
    switch (kind_) {
    case Kind::integers: {
        mpz_class z;
        if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
            throw ParseError("bad integer literal: " + s, 1);
        return Scalar(std::move(z));
    }
    case Kind::rationals:
    case Kind::localized_integers: {
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw ParseError("bad rational literal: " + s, 1);
        q.canonicalize();
        if (kind_ == Kind::localized_integers && !denominator_coprime_to(q, p_))
            throw PreconditionError("denominator of " + s + " is divisible by " +
                                    std::to_string(p_) + "; not in ZZ_(" +
                                    std::to_string(p_) + ")");
        return Scalar(std::move(q));
    }
    case Kind::prime_field: {
        mpz_class z;
        if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
            throw ParseError("bad residue literal: " + s, 1);
        return Scalar(mpz_mod_u64(z, p_));
    }
    }
    return Scalar();
}

std::string CoefficientRing::str(const Scalar& a) const {
    switch (kind_) {
    case Kind::integers:
        if (!a.holds_integer()) bad_payload("ZZ");
        return a.integer().get_str();
    case Kind::rationals:
    case Kind::localized_integers: {
        if (!a.holds_rational()) bad_payload("QQ / ZZ_(p)");
        const mpq_class& q = a.rational();
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case Kind::prime_field:
        if (!a.holds_residue()) bad_payload("GF(p)");
        return std::to_string(a.residue());
    }
    return "?";
}

bool CoefficientRing::contains(const Scalar& a) const {
    switch (kind_) {
    case Kind::integers: return a.holds_integer();
    case Kind::rationals: return a.holds_rational();
    case Kind::localized_integers:
        return a.holds_rational() && denominator_coprime_to(a.rational(), p_);
    case Kind::prime_field: return a.holds_residue() && a.residue() < p_;
    }
    return false;
}

Scalar CoefficientRing::add(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
    case Kind::integers: return Scalar(mpz_class(a.integer() + b.integer()));
    case Kind::rationals:
    case Kind::localized_integers:
        return Scalar(mpq_class(a.rational() + b.rational()));
    case Kind::prime_field: return Scalar(add_mod(a.residue(), b.residue(), p_));
    }
    return Scalar();
}

Scalar CoefficientRing::sub(const Scalar& a, const Scalar& b) const {
    return add(a, neg(b));
}

Scalar CoefficientRing::mul(const Scalar& a, const Scalar& b) const {
    switch (kind_) {
    case Kind::integers: return Scalar(mpz_class(a.integer() * b.integer()));
    case Kind::rationals:
    case Kind::localized_integers:
        return Scalar(mpq_class(a.rational() * b.rational()));
    case Kind::prime_field: return Scalar(mul_mod(a.residue(), b.residue(), p_));
    }
    return Scalar();
}

Scalar CoefficientRing::neg(const Scalar& a) const {
    switch (kind_) {
    case Kind::integers: return Scalar(mpz_class(-a.integer()));
    case Kind::rationals:
    case Kind::localized_integers: return Scalar(mpq_class(-a.rational()));
    case Kind::prime_field: {
        std::uint64_t r = a.residue();
        return Scalar(r == 0 ? 0 : p_ - r);
    }
    }
    return Scalar();
}

Scalar CoefficientRing::inv(const Scalar& a) const {
    if (is_zero(a)) throw PreconditionError("division by zero in " + description());
    switch (kind_) {
    case Kind::integers: {
        if (a.integer() == 1 || a.integer() == -1) return a;
        throw PreconditionError(a.integer().get_str() + " is not a unit in ZZ");
    }
    case Kind::rationals:
        return Scalar(mpq_class(1 / a.rational()));
    case Kind::localized_integers: {
        mpq_class r = 1 / a.rational();
        if (!denominator_coprime_to(r, p_))
            throw PreconditionError(str(a) + " is not a unit in " + description());
        return Scalar(std::move(r));
    }
    case Kind::prime_field:
        return Scalar(inv_mod(a.residue(), p_));
    }
    return Scalar();
}

Scalar CoefficientRing::div(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::integers) {
        if (is_zero(b)) throw PreconditionError("division by zero in ZZ");
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.integer().get_mpz_t(),
                    b.integer().get_mpz_t());
        if (r != 0)
            throw PreconditionError(b.integer().get_str() + " does not divide " +
                                    a.integer().get_str() + " in ZZ");
        return Scalar(std::move(q));
    }
    return mul(a, inv(b));
}

bool CoefficientRing::is_zero(const Scalar& a) const {
    switch (kind_) {
    case Kind::integers: return a.integer() == 0;
    case Kind::rationals:
    case Kind::localized_integers: return a.rational() == 0;
    case Kind::prime_field: return a.residue() == 0;
    }
    return false;
}

bool CoefficientRing::is_one(const Scalar& a) const {
    switch (kind_) {
    case Kind::integers: return a.integer() == 1;
    case Kind::rationals:
    case Kind::localized_integers: return a.rational() == 1;
    case Kind::prime_field: return a.residue() == 1 % p_;
    }
    return false;
}

bool has_coefficient_hom(const CoefficientRing& from, const CoefficientRing& to) {
    using K = CoefficientRing::Kind;
    if (from == to) return true;
    switch (from.kind()) {
    case K::integers:
        return true; // ZZ is initial
    case K::localized_integers:
        return to.kind() == K::rationals ||
               (to.kind() == K::prime_field && to.prime() == from.prime());
    case K::rationals:
    case K::prime_field:
        return false;
    }
    return false;
}

Scalar map_scalar(const CoefficientRing& from, const CoefficientRing& to,
                  const Scalar& a) {
    using K = CoefficientRing::Kind;
    if (!has_coefficient_hom(from, to))
        throw UnsupportedMapError("no canonical coefficient map " +
                                  from.description() + " -> " + to.description());
    if (from == to) return a;
    switch (from.kind()) {
    case K::integers: {
        const mpz_class& z = a.integer();
        switch (to.kind()) {
        case K::rationals:
        case K::localized_integers: return Scalar(mpq_class(z));
        case K::prime_field: return to.from_string(z.get_str());
        default: break;
        }
        break;
    }
    case K::localized_integers: {
        const mpq_class& q = a.rational();
        if (to.kind() == K::rationals) return Scalar(mpq_class(q));
        // residue map into GF(p): num * den^{-1}, den is a unit by invariant
        Scalar num = to.from_string(q.get_num().get_str());
        Scalar den = to.from_string(q.get_den().get_str());
        return to.div(num, den);
    }
    default: break;
    }
    throw UnsupportedMapError("no canonical coefficient map " + from.description() +
                              " -> " + to.description());
}

} // namespace arcsmith
