#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcsmith/poly.hpp"
#include "arcsmith/ring.hpp"

namespace arcsmith {

// Truncated univariate power series: an element of A[t]/(t^(precision+1)).
// Arithmetic discards every term of degree > precision. Elements of the
// ideal (t) are exactly the series with zero constant coefficient.
class TruncatedSeries {
public:
    // the zero series
    TruncatedSeries(CoefficientRing ring, std::size_t precision);

    static TruncatedSeries from_coeffs(CoefficientRing ring, std::size_t precision,
                                       std::vector<Scalar> coeffs);
    // the series t (zero when precision == 0)
    static TruncatedSeries t(const CoefficientRing& ring, std::size_t precision);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t precision() const { return precision_; }
    const Scalar& coeff(std::size_t q) const { return coeffs_[q]; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool has_zero_constant_term() const { return ring_.is_zero(coeffs_[0]); }
    // Order of vanishing: smallest q with nonzero coefficient, or nullopt when
    // every stored coefficient vanishes (i.e. ord > precision).
    std::optional<std::size_t> order() const;

    TruncatedSeries operator+(const TruncatedSeries& other) const;
    TruncatedSeries operator-(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries negated() const;
    TruncatedSeries scaled(const Scalar& c) const;

    bool operator==(const TruncatedSeries& other) const;

    // Re-truncates to a lower precision.
    TruncatedSeries truncated(std::size_t precision) const;
    TruncatedSeries reduce_coefficients(const CoefficientRing& target) const;

    std::string str(std::string_view var = "t") const;

private:
    CoefficientRing ring_;
    std::size_t precision_;
    std::vector<Scalar> coeffs_; // size precision_+1
};

// Evaluates p at the given series values (all in the same A[t]/(t^(N+1))),
// mapping p's coefficients through the canonical homomorphism into A.
TruncatedSeries evaluate_at_series(const SparsePoly& p,
                                   std::span<const TruncatedSeries> values);

// Exact division in K[t]/(t^(N+1)) over a field K. Dividing by a series of
// order d loses d orders of precision: the quotient has precision N - d.
// Returns nullopt when num is not divisible by den at this precision.
// A zero denominator divides only the zero numerator (quotient 0 by
// convention, full precision).
std::optional<TruncatedSeries> series_div(const TruncatedSeries& num,
                                          const TruncatedSeries& den);

// Truncated bivariate power series: an element of
// K[u,t]/(u^(prec_u+1), t^(prec_t+1)), used for wedges.
class BiSeries {
public:
    BiSeries(CoefficientRing ring, std::size_t prec_u, std::size_t prec_t);

    static BiSeries monomial(const CoefficientRing& ring, std::size_t prec_u,
                             std::size_t prec_t, std::size_t du, std::size_t dt,
                             Scalar c);
    // embeds a series in t
    static BiSeries from_t_series(const TruncatedSeries& s, std::size_t prec_u);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t prec_u() const { return prec_u_; }
    std::size_t prec_t() const { return prec_t_; }
    const Scalar& coeff(std::size_t du, std::size_t dt) const {
        return coeffs_[du * (prec_t_ + 1) + dt];
    }

    bool is_zero() const;
    // Lowest term by total degree, ties to the smaller u-exponent.
    std::optional<std::pair<std::size_t, std::size_t>> lowest_term() const;

    BiSeries operator+(const BiSeries& other) const;
    BiSeries operator*(const BiSeries& other) const;
    BiSeries negated() const;
    bool operator==(const BiSeries& other) const;

    // substitutes u = 0; the result keeps the t-precision
    TruncatedSeries at_u_zero() const;

    std::string str(std::string_view u = "u", std::string_view t = "t") const;

private:
    Scalar& at(std::size_t du, std::size_t dt) {
        return coeffs_[du * (prec_t_ + 1) + dt];
    }

    CoefficientRing ring_;
    std::size_t prec_u_, prec_t_;
    std::vector<Scalar> coeffs_;
};

BiSeries evaluate_at_biseries(const SparsePoly& p, std::span<const BiSeries> values);

} // namespace arcsmith
