#include "arcsmith/series.hpp"

#include <algorithm>

#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.ring() == b.ring()))
        throw StructuralError("series rings differ: " + a.ring().description() +
                              " vs " + b.ring().description());
    if (a.precision() != b.precision())
        throw StructuralError("series precisions differ: " +
                              std::to_string(a.precision()) + " vs " +
                              std::to_string(b.precision()));
}

void check_compatible(const BiSeries& a, const BiSeries& b) {
    if (!(a.ring() == b.ring()))
        throw StructuralError("series rings differ: " + a.ring().description() +
                              " vs " + b.ring().description());
    if (a.prec_u() != b.prec_u() || a.prec_t() != b.prec_t())
        throw StructuralError("bivariate precisions differ");
}

std::string format_series_term(const CoefficientRing& ring, const Scalar& c,
                               const std::string& factors, bool first,
                               std::string& out) {
    Scalar a = c;
    bool negative = false;
    if (a.holds_integer()) negative = a.integer() < 0;
    else if (a.holds_rational()) negative = a.rational() < 0;
    if (negative) a = ring.neg(a);

    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    std::string cs = ring.str(a);
    if (factors.empty()) out += cs;
    else if (cs == "1") out += factors;
    else out += cs + "*" + factors;
    return out;
}

} // namespace

TruncatedSeries::TruncatedSeries(CoefficientRing ring, std::size_t precision)
    : ring_(std::move(ring)), precision_(precision),
      coeffs_(precision + 1, ring_.zero()) {}

TruncatedSeries TruncatedSeries::from_coeffs(CoefficientRing ring,
                                             std::size_t precision,
                                             std::vector<Scalar> coeffs) {
    if (coeffs.size() != precision + 1)
        throw StructuralError("series needs " + std::to_string(precision + 1) +
                              " coefficients, got " + std::to_string(coeffs.size()));
    TruncatedSeries s(std::move(ring), precision);
    s.coeffs_ = std::move(coeffs);
    return s;
}

TruncatedSeries TruncatedSeries::t(const CoefficientRing& ring,
                                   std::size_t precision) {
    TruncatedSeries s(ring, precision);
    if (precision >= 1) s.coeffs_[1] = ring.one();
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [&](const Scalar& c) { return ring_.is_zero(c); });
}

std::optional<std::size_t> TruncatedSeries::order() const {
    for (std::size_t q = 0; q <= precision_; ++q)
        if (!ring_.is_zero(coeffs_[q])) return q;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
    check_compatible(*this, other);
    TruncatedSeries out(ring_, precision_);
    for (std::size_t q = 0; q <= precision_; ++q)
        out.coeffs_[q] = ring_.add(coeffs_[q], other.coeffs_[q]);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
    return *this + other.negated();
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    check_compatible(*this, other);
    TruncatedSeries out(ring_, precision_);
    for (std::size_t a = 0; a <= precision_; ++a) {
        if (ring_.is_zero(coeffs_[a])) continue;
        for (std::size_t b = 0; a + b <= precision_; ++b) {
            if (ring_.is_zero(other.coeffs_[b])) continue;
            out.coeffs_[a + b] = ring_.add(out.coeffs_[a + b],
                                           ring_.mul(coeffs_[a], other.coeffs_[b]));
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::negated() const {
    TruncatedSeries out(ring_, precision_);
    for (std::size_t q = 0; q <= precision_; ++q) out.coeffs_[q] = ring_.neg(coeffs_[q]);
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& c) const {
    TruncatedSeries out(ring_, precision_);
    for (std::size_t q = 0; q <= precision_; ++q) out.coeffs_[q] = ring_.mul(coeffs_[q], c);
    return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
    return ring_ == other.ring_ && precision_ == other.precision_ &&
           coeffs_ == other.coeffs_;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
    if (precision > precision_)
        throw StructuralError("cannot extend series precision " +
                              std::to_string(precision_) + " to " +
                              std::to_string(precision));
    TruncatedSeries out(ring_, precision);
    for (std::size_t q = 0; q <= precision; ++q) out.coeffs_[q] = coeffs_[q];
    return out;
}

TruncatedSeries TruncatedSeries::reduce_coefficients(
    const CoefficientRing& target) const {
    TruncatedSeries out(target, precision_);
    for (std::size_t q = 0; q <= precision_; ++q)
        out.coeffs_[q] = map_scalar(ring_, target, coeffs_[q]);
    return out;
}

std::string TruncatedSeries::str(std::string_view var) const {
    std::string out;
    bool first = true;
    for (std::size_t q = 0; q <= precision_; ++q) {
        if (ring_.is_zero(coeffs_[q])) continue;
        std::string factors;
        if (q >= 1) {
            factors = std::string(var);
            if (q > 1) factors += "^" + std::to_string(q);
        }
        format_series_term(ring_, coeffs_[q], factors, first, out);
        first = false;
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries evaluate_at_series(const SparsePoly& p,
                                   std::span<const TruncatedSeries> values) {
    if (values.size() != p.nvars())
        throw StructuralError("evaluation needs " + std::to_string(p.nvars()) +
                              " series, got " + std::to_string(values.size()));
    if (values.empty())
        throw StructuralError("series evaluation needs at least one variable");
    const CoefficientRing& target = values[0].ring();
    const std::size_t prec = values[0].precision();
    for (const auto& v : values) check_compatible(values[0], v);

    TruncatedSeries acc(target, prec);
    for (const auto& t : p.terms()) {
        TruncatedSeries prod = TruncatedSeries::from_coeffs(
            target, prec, [&] {
                std::vector<Scalar> c(prec + 1, target.zero());
                c[0] = map_scalar(p.ring(), target, t.coeff);
                return c;
            }());
        for (std::size_t k = 0; k < p.nvars(); ++k)
            for (std::uint32_t e = 0; e < t.exps[k]; ++e) prod = prod * values[k];
        acc = acc + prod;
    }
    return acc;
}

std::optional<TruncatedSeries> series_div(const TruncatedSeries& num,
                                          const TruncatedSeries& den) {
    check_compatible(num, den);
    const CoefficientRing& K = num.ring();
    if (!K.is_field())
        throw StructuralError("series division requires a field, got " +
                              K.description());
    auto d = den.order();
    if (!d) {
        if (num.is_zero()) return TruncatedSeries(K, num.precision());
        return std::nullopt;
    }
    auto n_ord = num.order();
    if (n_ord.has_value() && *n_ord < *d) return std::nullopt;
    if (!n_ord.has_value() && *d > 0) {
        // numerator vanishes to full precision: quotient 0 at reduced precision
        return TruncatedSeries(K, num.precision() - *d);
    }

    const std::size_t out_prec = num.precision() - *d;
    // shift out t^d, then do the triangular solve q = num' / den'
    std::vector<Scalar> nn(out_prec + 1, K.zero());
    std::vector<Scalar> dd(out_prec + 1, K.zero());
    for (std::size_t q = 0; q <= out_prec; ++q) {
        nn[q] = num.coeff(q + *d);
        dd[q] = den.coeff(q + *d);
    }
    Scalar lead_inv = K.inv(dd[0]);
    std::vector<Scalar> out(out_prec + 1, K.zero());
    for (std::size_t q = 0; q <= out_prec; ++q) {
        Scalar acc = nn[q];
        for (std::size_t r = 0; r < q; ++r)
            acc = K.sub(acc, K.mul(out[r], dd[q - r]));
        out[q] = K.mul(acc, lead_inv);
    }
    return TruncatedSeries::from_coeffs(K, out_prec, std::move(out));
}

BiSeries::BiSeries(CoefficientRing ring, std::size_t prec_u, std::size_t prec_t)
    : ring_(std::move(ring)), prec_u_(prec_u), prec_t_(prec_t),
      coeffs_((prec_u + 1) * (prec_t + 1), ring_.zero()) {}

BiSeries BiSeries::monomial(const CoefficientRing& ring, std::size_t prec_u,
                            std::size_t prec_t, std::size_t du, std::size_t dt,
                            Scalar c) {
    BiSeries s(ring, prec_u, prec_t);
    if (du <= prec_u && dt <= prec_t && !ring.is_zero(c)) s.at(du, dt) = std::move(c);
    return s;
}

BiSeries BiSeries::from_t_series(const TruncatedSeries& s, std::size_t prec_u) {
    BiSeries out(s.ring(), prec_u, s.precision());
    for (std::size_t q = 0; q <= s.precision(); ++q) out.at(0, q) = s.coeff(q);
    return out;
}

bool BiSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [&](const Scalar& c) { return ring_.is_zero(c); });
}

std::optional<std::pair<std::size_t, std::size_t>> BiSeries::lowest_term() const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t du = 0; du <= prec_u_; ++du) {
        for (std::size_t dt = 0; dt <= prec_t_; ++dt) {
            if (ring_.is_zero(coeff(du, dt))) continue;
            if (!best || du + dt < best->first + best->second ||
                (du + dt == best->first + best->second && du < best->first))
                best = {du, dt};
        }
    }
    return best;
}

BiSeries BiSeries::operator+(const BiSeries& other) const {
    check_compatible(*this, other);
    BiSeries out(ring_, prec_u_, prec_t_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out.coeffs_[k] = ring_.add(coeffs_[k], other.coeffs_[k]);
    return out;
}

BiSeries BiSeries::operator*(const BiSeries& other) const {
    check_compatible(*this, other);
    BiSeries out(ring_, prec_u_, prec_t_);
    for (std::size_t au = 0; au <= prec_u_; ++au)
        for (std::size_t at = 0; at <= prec_t_; ++at) {
            if (ring_.is_zero(coeff(au, at))) continue;
            for (std::size_t bu = 0; au + bu <= prec_u_; ++bu)
                for (std::size_t bt = 0; at + bt <= prec_t_; ++bt) {
                    if (ring_.is_zero(other.coeff(bu, bt))) continue;
                    Scalar& dst = out.at(au + bu, at + bt);
                    dst = ring_.add(dst, ring_.mul(coeff(au, at), other.coeff(bu, bt)));
                }
        }
    return out;
}

BiSeries BiSeries::negated() const {
    BiSeries out(ring_, prec_u_, prec_t_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = ring_.neg(coeffs_[k]);
    return out;
}

bool BiSeries::operator==(const BiSeries& other) const {
    return ring_ == other.ring_ && prec_u_ == other.prec_u_ &&
           prec_t_ == other.prec_t_ && coeffs_ == other.coeffs_;
}

TruncatedSeries BiSeries::at_u_zero() const {
    TruncatedSeries out(ring_, prec_t_);
    std::vector<Scalar> c(prec_t_ + 1, ring_.zero());
    for (std::size_t q = 0; q <= prec_t_; ++q) c[q] = coeff(0, q);
    return TruncatedSeries::from_coeffs(ring_, prec_t_, std::move(c));
}

std::string BiSeries::str(std::string_view u, std::string_view t) const {
    // ascending by total degree, then by u-exponent
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t du = 0; du <= prec_u_; ++du)
        for (std::size_t dt = 0; dt <= prec_t_; ++dt)
            if (!ring_.is_zero(coeff(du, dt))) idx.emplace_back(du, dt);
    std::sort(idx.begin(), idx.end(), [](auto a, auto b) {
        auto ta = a.first + a.second, tb = b.first + b.second;
        if (ta != tb) return ta < tb;
        return a.first < b.first;
    });
    if (idx.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto [du, dt] : idx) {
        std::string factors;
        if (du) {
            factors += std::string(u);
            if (du > 1) factors += "^" + std::to_string(du);
        }
        if (dt) {
            if (!factors.empty()) factors += "*";
            factors += std::string(t);
            if (dt > 1) factors += "^" + std::to_string(dt);
        }
        format_series_term(ring_, coeff(du, dt), factors, first, out);
        first = false;
    }
    return out;
}

BiSeries evaluate_at_biseries(const SparsePoly& p, std::span<const BiSeries> values) {
    if (values.size() != p.nvars())
        throw StructuralError("evaluation needs " + std::to_string(p.nvars()) +
                              " series, got " + std::to_string(values.size()));
    if (values.empty())
        throw StructuralError("series evaluation needs at least one variable");
    const CoefficientRing& target = values[0].ring();
    const std::size_t pu = values[0].prec_u(), pt = values[0].prec_t();
    for (const auto& v : values) check_compatible(values[0], v);

    BiSeries acc(target, pu, pt);
    for (const auto& t : p.terms()) {
        BiSeries prod = BiSeries::monomial(target, pu, pt, 0, 0,
                                           map_scalar(p.ring(), target, t.coeff));
        for (std::size_t k = 0; k < p.nvars(); ++k)
            for (std::uint32_t e = 0; e < t.exps[k]; ++e) prod = prod * values[k];
        acc = acc + prod;
    }
    return acc;
}

} // namespace arcsmith
