// Independent oracles used to freeze expected values. These stay deliberately
// primitive (hand-rolled modular arithmetic, direct series substitution) so
// they cannot share a bug with the code paths they check.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcsmith/poly.hpp"
#include "arcsmith/ring.hpp"
#include "arcsmith/series.hpp"

namespace oracles {

// Exhaustive count of level-2 jet solutions of the A_1 cone over GF(p):
// the only equation is F_12 = A11*A21 - A31^2 (the t^2 coefficient of
// z1*z2 - z3^2), enumerated over the full (A11,A21,A31,A12,A22,A32) grid.
inline std::uint64_t a1_level2_solution_count(std::uint64_t p) {
    std::uint64_t count = 0;
    for (std::uint64_t a11 = 0; a11 < p; ++a11)
        for (std::uint64_t a21 = 0; a21 < p; ++a21)
            for (std::uint64_t a31 = 0; a31 < p; ++a31) {
                std::uint64_t lhs = (a11 * a21) % p;
                std::uint64_t rhs = (a31 * a31) % p;
                if (lhs == rhs) count += p * p * p; // free (A12,A22,A32)
            }
    return count;
}

// Level-1 jet solutions of the A_1 cone over GF(p): the t^1 coefficient of
// z1*z2 - z3^2 is identically zero, so the whole grid solves the system.
inline std::uint64_t a1_level1_solution_count(std::uint64_t p) {
    return p * p * p;
}

// Order of vanishing of f along the parametrized zero line of a linear form
// g = a*x + b*y: the line is (b*t, -a*t). Series substitution only; no
// linear algebra involved.
inline std::optional<std::size_t> order_on_line(const arcsmith::SparsePoly& f,
                                                const arcsmith::SparsePoly& g,
                                                std::size_t precision) {
    using namespace arcsmith;
    const CoefficientRing& K = f.ring();
    if (g.total_degree() != 1)
        throw std::logic_error("oracle needs a linear form");
    Scalar a = K.zero(), b = K.zero();
    for (const auto& t : g.terms()) {
        if (t.exps[0] == 1) a = t.coeff;
        if (t.exps[1] == 1) b = t.coeff;
    }
    std::vector<TruncatedSeries> line{
        TruncatedSeries::t(K, precision).scaled(b),
        TruncatedSeries::t(K, precision).scaled(K.neg(a))};
    return evaluate_at_series(f, line).order();
}

} // namespace oracles
