#include "arcsmith/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

std::size_t degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

// descending graded-lex
struct TermBefore {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return grlex_compare(a, b) > 0;
    }
};

void check_compatible(const SparsePoly& a, const SparsePoly& b) {
    if (!(a.ring() == b.ring()))
        throw StructuralError("polynomial rings differ: " + a.ring().description() +
                              " vs " + b.ring().description());
    if (a.nvars() != b.nvars())
        throw StructuralError("variable counts differ: " + std::to_string(a.nvars()) +
                              " vs " + std::to_string(b.nvars()));
}

} // namespace

int grlex_compare(const Exponents& a, const Exponents& b) {
    std::size_t da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db ? -1 : 1;
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

SparsePoly::SparsePoly(CoefficientRing ring, std::size_t nvars)
    : ring_(std::move(ring)), nvars_(nvars) {}

SparsePoly SparsePoly::constant(const CoefficientRing& ring, std::size_t nvars,
                                Scalar value) {
    SparsePoly p(ring, nvars);
    if (!ring.is_zero(value))
        p.terms_.push_back({Exponents(nvars, 0), std::move(value)});
    return p;
}

SparsePoly SparsePoly::variable(const CoefficientRing& ring, std::size_t nvars,
                                std::size_t index) {
    if (index >= nvars)
        throw StructuralError("variable index " + std::to_string(index) +
                              " out of range for " + std::to_string(nvars) +
                              " variables");
    SparsePoly p(ring, nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_.push_back({std::move(e), ring.one()});
    return p;
}

SparsePoly SparsePoly::from_terms(CoefficientRing ring, std::size_t nvars,
                                  std::vector<Term> terms) {
    std::map<Exponents, Scalar, TermBefore> acc;
    for (auto& t : terms) {
        if (t.exps.size() != nvars)
            throw StructuralError("exponent vector length " +
                                  std::to_string(t.exps.size()) + " != nvars " +
                                  std::to_string(nvars));
        auto [it, inserted] = acc.try_emplace(std::move(t.exps), t.coeff);
        if (!inserted) it->second = ring.add(it->second, t.coeff);
    }
    SparsePoly p(std::move(ring), nvars);
    for (auto& [e, c] : acc)
        if (!p.ring_.is_zero(c)) p.terms_.push_back({e, c});
    return p;
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exps) == 0);
}

Scalar SparsePoly::constant_term() const {
    if (!terms_.empty() && degree_of(terms_.back().exps) == 0)
        return terms_.back().coeff;
    return ring_.zero();
}

std::size_t SparsePoly::total_degree() const {
    return terms_.empty() ? 0 : degree_of(terms_.front().exps);
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
    check_compatible(*this, other);
    // merge two sorted term lists
    SparsePoly out(ring_, nvars_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = grlex_compare(terms_[i].exps, other.terms_[j].exps);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            Scalar s = ring_.add(terms_[i].coeff, other.terms_[j].coeff);
            if (!ring_.is_zero(s)) out.terms_.push_back({terms_[i].exps, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
    return *this + other.negated();
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
    check_compatible(*this, other);
    std::map<Exponents, Scalar, TermBefore> acc;
    for (const auto& ta : terms_) {
        for (const auto& tb : other.terms_) {
            Exponents e(nvars_);
            for (std::size_t k = 0; k < nvars_; ++k) e[k] = ta.exps[k] + tb.exps[k];
            Scalar c = ring_.mul(ta.coeff, tb.coeff);
            auto [it, inserted] = acc.try_emplace(std::move(e), c);
            if (!inserted) it->second = ring_.add(it->second, c);
        }
    }
    SparsePoly out(ring_, nvars_);
    for (auto& [e, c] : acc)
        if (!ring_.is_zero(c)) out.terms_.push_back({e, c});
    return out;
}

SparsePoly SparsePoly::negated() const {
    SparsePoly out(ring_, nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.exps, ring_.neg(t.coeff)});
    return out;
}

SparsePoly SparsePoly::scaled(const Scalar& c) const {
    SparsePoly out(ring_, nvars_);
    if (ring_.is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar s = ring_.mul(t.coeff, c);
        if (!ring_.is_zero(s)) out.terms_.push_back({t.exps, std::move(s)});
    }
    return out;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
    SparsePoly out = constant(ring_, nvars_, ring_.one());
    for (std::uint32_t k = 0; k < e; ++k) out = out * *this;
    return out;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
    return ring_ == other.ring_ && nvars_ == other.nvars_ && terms_ == other.terms_;
}

SparsePoly SparsePoly::reduce_coefficients(const CoefficientRing& target) const {
    SparsePoly out(target, nvars_);
    for (const auto& t : terms_) {
        Scalar c = map_scalar(ring_, target, t.coeff);
        if (!target.is_zero(c)) out.terms_.push_back({t.exps, std::move(c)});
    }
    return out;
}

SparsePoly SparsePoly::truncate_total_degree(std::size_t m) const {
    SparsePoly out(ring_, nvars_);
    for (const auto& t : terms_)
        if (degree_of(t.exps) <= m) out.terms_.push_back(t);
    return out;
}

Scalar SparsePoly::evaluate(const CoefficientRing& target,
                            std::span<const Scalar> values) const {
    if (values.size() != nvars_)
        throw StructuralError("evaluation needs " + std::to_string(nvars_) +
                              " values, got " + std::to_string(values.size()));
    Scalar acc = target.zero();
    for (const auto& t : terms_) {
        Scalar prod = map_scalar(ring_, target, t.coeff);
        for (std::size_t k = 0; k < nvars_; ++k)
            for (std::uint32_t e = 0; e < t.exps[k]; ++e)
                prod = target.mul(prod, values[k]);
        acc = target.add(acc, prod);
    }
    return acc;
}

std::string SparsePoly::str(std::span<const std::string> var_names) const {
    if (var_names.size() != nvars_)
        throw StructuralError("need " + std::to_string(nvars_) + " variable names");
    if (terms_.empty()) return "0";

    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        bool negative = false;
        // pull an explicit sign out of ZZ / QQ coefficients; GF(p) residues
        // are printed as they are
        if (c.holds_integer()) {
            negative = c.integer() < 0;
        } else if (c.holds_rational()) {
            negative = c.rational() < 0;
        }
        if (negative) c = ring_.neg(c);

        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }

        std::string factors;
        for (std::size_t k = 0; k < nvars_; ++k) {
            if (t.exps[k] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += var_names[k];
            if (t.exps[k] > 1) factors += "^" + std::to_string(t.exps[k]);
        }

        std::string cs = ring_.str(c);
        if (factors.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += factors;
        } else {
            out += cs + "*" + factors;
        }
    }
    return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 1; i <= nvars; ++i) names.push_back("Y" + std::to_string(i));
    return names;
}

} // namespace arcsmith
