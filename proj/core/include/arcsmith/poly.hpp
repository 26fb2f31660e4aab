#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arcsmith/ring.hpp"

namespace arcsmith {

// Dense exponent vector, one entry per variable.
using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic comparison: higher total degree first, ties broken
// lexicographically. Returns <0, 0, >0 like strcmp. This is the canonical
// term order used for storage, printing and serialization.
int grlex_compare(const Exponents& a, const Exponents& b);

// Sparse multivariate polynomial with exact coefficients. Terms are kept in
// descending graded-lex order and never carry a zero coefficient. Immutable
// after construction; all operations return new values.
class SparsePoly {
public:
    struct Term {
        Exponents exps;
        Scalar coeff;

        bool operator==(const Term&) const = default;
    };

    // the zero polynomial
    SparsePoly(CoefficientRing ring, std::size_t nvars);

    static SparsePoly constant(const CoefficientRing& ring, std::size_t nvars,
                               Scalar value);
    static SparsePoly variable(const CoefficientRing& ring, std::size_t nvars,
                               std::size_t index);
    // Normalizes: sorts, merges duplicate exponent vectors, prunes zeros.
    static SparsePoly from_terms(CoefficientRing ring, std::size_t nvars,
                                 std::vector<Term> terms);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const; // zero scalar when absent
    std::size_t total_degree() const; // 0 for the zero polynomial

    SparsePoly operator+(const SparsePoly& other) const;
    SparsePoly operator-(const SparsePoly& other) const;
    SparsePoly operator*(const SparsePoly& other) const;
    SparsePoly negated() const;
    SparsePoly scaled(const Scalar& c) const;
    SparsePoly pow(std::uint32_t e) const;

    bool operator==(const SparsePoly& other) const;

    // Coefficient-wise image under the canonical map ring() -> target;
    // zero images are pruned. Throws UnsupportedMapError when no map exists.
    SparsePoly reduce_coefficients(const CoefficientRing& target) const;

    // Drops every monomial of total degree > m.
    SparsePoly truncate_total_degree(std::size_t m) const;

    // Evaluation at scalars living in `target` (coefficients are mapped
    // through the canonical homomorphism first).
    Scalar evaluate(const CoefficientRing& target,
                    std::span<const Scalar> values) const;

    std::string str(std::span<const std::string> var_names) const;

private:
    CoefficientRing ring_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

// Default variable names Y1..Yn.
std::vector<std::string> default_variable_names(std::size_t nvars);

} // namespace arcsmith
