#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arcsmith/poly.hpp"
#include "arcsmith/ring.hpp"
#include "arcsmith/series.hpp"

namespace arcsmith {

// Quotient of two polynomials; den is never the zero polynomial. No common
// factors are cancelled (that would need gcds); values are compared via
// cross multiplication where needed.
struct RationalFunction {
    SparsePoly num;
    SparsePoly den;
};

// Expression grammar over a coefficient ring and a fixed variable list:
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('+'|'-')* power
//   power  := atom ('^' integer)?
//   atom   := integer | variable | '(' expr ')'
// Implicit multiplication is a syntax error; '.' and '^' chains likewise.
// Errors carry 1-based column positions.

// Parses an expression whose value is a polynomial: divisions must cancel to
// a constant denominator that divides every coefficient in `ring`.
SparsePoly parse_polynomial(std::string_view src, const CoefficientRing& ring,
                            std::span<const std::string> vars);

// Parses an expression as a rational function (general '/').
RationalFunction parse_rational(std::string_view src, const CoefficientRing& ring,
                                std::span<const std::string> vars);

// Parses a univariate polynomial in `var` as a truncated series at the given
// precision. Literals of degree > precision are rejected.
TruncatedSeries parse_series(std::string_view src, const CoefficientRing& field,
                             std::string_view var, std::size_t precision);

// Comma-separated list of series literals.
std::vector<TruncatedSeries> parse_series_list(std::string_view src,
                                               const CoefficientRing& field,
                                               std::string_view var,
                                               std::size_t precision);

} // namespace arcsmith
