#include "arcsmith/jet.hpp"

#include <numeric>

#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

// Series in t with SparsePoly coefficients, truncated at t^m: the working
// algebra Lambda[A][t]/(t^(m+1)) of the jet expansion.
struct PolySeries {
    std::vector<SparsePoly> c; // index = t-degree, size m+1

    static PolySeries zeros(const CoefficientRing& ring, std::size_t nvars,
                            std::size_t m) {
        return PolySeries{std::vector<SparsePoly>(m + 1, SparsePoly(ring, nvars))};
    }
};

PolySeries ps_mul(const PolySeries& a, const PolySeries& b) {
    const std::size_t m = a.c.size() - 1;
    PolySeries out{std::vector<SparsePoly>(
        m + 1, SparsePoly(a.c[0].ring(), a.c[0].nvars()))};
    for (std::size_t i = 0; i <= m; ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= m; ++j) {
            if (b.c[j].is_zero()) continue;
            out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
        }
    }
    return out;
}

} // namespace

NiceTriplePresentation::NiceTriplePresentation(CoefficientRing ring,
                                               std::size_t nvars,
                                               std::vector<SparsePoly> relations,
                                               std::string label)
    : ring_(std::move(ring)), nvars_(nvars), relations_(std::move(relations)),
      label_(std::move(label)) {
    if (nvars_ < 1)
        throw StructuralError("a nice triple presentation needs n >= 1 variables");
    for (const auto& f : relations_) {
        if (!(f.ring() == ring_))
            throw StructuralError("relation ring " + f.ring().description() +
                                  " differs from triple ring " + ring_.description());
        if (f.nvars() != nvars_)
            throw StructuralError("relation has " + std::to_string(f.nvars()) +
                                  " variables, triple has " + std::to_string(nvars_));
        if (!ring_.is_zero(f.constant_term()))
            throw PreconditionError(
                "relation has nonzero constant term; Lambda -> R/I cannot be an "
                "isomorphism");
    }
}

JetSystem::JetSystem(CoefficientRing ring, std::size_t nvars, std::size_t level,
                     std::vector<std::vector<SparsePoly>> equations)
    : ring_(std::move(ring)), nvars_(nvars), level_(level),
      equations_(std::move(equations)) {
    for (const auto& row : equations_)
        if (row.size() != level_)
            throw StructuralError("jet equation row has " +
                                  std::to_string(row.size()) + " cells, expected " +
                                  std::to_string(level_));
}

const SparsePoly& JetSystem::equation(std::size_t j, std::size_t q) const {
    if (j >= equations_.size() || q < 1 || q > level_)
        throw StructuralError("jet equation index (j=" + std::to_string(j) +
                              ", q=" + std::to_string(q) + ") out of range");
    return equations_[j][q - 1];
}

std::size_t JetSystem::grid_index(std::size_t n, std::size_t m, std::size_t i,
                                  std::size_t j) {
    if (i < 1 || i > n || j < 1 || j > m)
        throw StructuralError("grid index (i=" + std::to_string(i) +
                              ", j=" + std::to_string(j) + ") out of range");
    return (i - 1) * m + (j - 1);
}

std::vector<std::string> JetSystem::variable_names() const {
    return jet_variable_names(nvars_, level_);
}

bool JetSystem::operator==(const JetSystem& other) const {
    return ring_ == other.ring_ && nvars_ == other.nvars_ &&
           level_ == other.level_ && equations_ == other.equations_;
}

std::vector<std::string> jet_variable_names(std::size_t n, std::size_t m) {
    const bool compact = n <= 9 && m <= 9;
    std::vector<std::string> names;
    names.reserve(n * m);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            names.push_back(compact
                                ? "A" + std::to_string(i) + std::to_string(j)
                                : "A" + std::to_string(i) + "_" + std::to_string(j));
    return names;
}

SparsePoly truncate_relation(const SparsePoly& f, std::size_t m) {
    return f.truncate_total_degree(m);
}

JetSystem generate_jet_system(const NiceTriplePresentation& tri, std::size_t m) {
    if (m < 1) throw PreconditionError("jet level must be >= 1");
    const CoefficientRing& ring = tri.ring();
    const std::size_t n = tri.nvars();
    const std::size_t grid_vars = n * m;

    // z_i = A_i1 t + ... + A_im t^m as series with polynomial coefficients
    std::vector<PolySeries> z;
    z.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        PolySeries zi = PolySeries::zeros(ring, grid_vars, m);
        for (std::size_t j = 1; j <= m; ++j)
            zi.c[j] = SparsePoly::variable(ring, grid_vars,
                                           JetSystem::grid_index(n, m, i, j));
        z.push_back(std::move(zi));
    }

    // power cache: pw[i][e] = z_i^e, filled on demand
    std::vector<std::vector<PolySeries>> pw(n);
    auto power = [&](std::size_t i, std::uint32_t e) -> const PolySeries& {
        auto& cache = pw[i];
        if (cache.empty()) {
            PolySeries one = PolySeries::zeros(ring, grid_vars, m);
            one.c[0] = SparsePoly::constant(ring, grid_vars, ring.one());
            cache.push_back(std::move(one));
        }
        while (cache.size() <= e) cache.push_back(ps_mul(cache.back(), z[i]));
        return cache[e];
    };

    std::vector<std::vector<SparsePoly>> grid;
    grid.reserve(tri.relation_count());
    for (const auto& f_full : tri.relations()) {
        const SparsePoly f = truncate_relation(f_full, m);
        PolySeries acc = PolySeries::zeros(ring, grid_vars, m);
        for (const auto& term : f.terms()) {
            PolySeries prod = PolySeries::zeros(ring, grid_vars, m);
            prod.c[0] = SparsePoly::constant(ring, grid_vars, term.coeff);
            for (std::size_t i = 0; i < n; ++i)
                if (term.exps[i] > 0) prod = ps_mul(prod, power(i, term.exps[i]));
            for (std::size_t q = 0; q <= m; ++q) acc.c[q] = acc.c[q] + prod.c[q];
        }
        if (!acc.c[0].is_zero())
            throw CertificationError("t^0 coefficient of a jet expansion is nonzero; "
                                     "relation constant term slipped through");
        grid.emplace_back(acc.c.begin() + 1, acc.c.end());
    }
    return JetSystem(ring, n, m, std::move(grid));
}

std::vector<TruncatedSeries> evaluate_arc(const NiceTriplePresentation& tri,
                                          const ArcAssignment& a, std::size_t m) {
    if (m < 1) throw PreconditionError("jet level must be >= 1");
    if (a.nvars != tri.nvars() || a.level != m)
        throw StructuralError("arc assignment shape (" + std::to_string(a.nvars) +
                              ", " + std::to_string(a.level) +
                              ") does not match (n=" + std::to_string(tri.nvars()) +
                              ", m=" + std::to_string(m) + ")");
    if (a.values.size() != a.nvars * a.level)
        throw StructuralError("arc assignment has wrong value count");
    if (!has_coefficient_hom(tri.ring(), a.ring))
        throw UnsupportedMapError(a.ring.description() +
                                  " is not a Lambda-algebra over " +
                                  tri.ring().description());

    std::vector<TruncatedSeries> z;
    z.reserve(tri.nvars());
    for (std::size_t i = 1; i <= tri.nvars(); ++i) {
        std::vector<Scalar> coeffs(m + 1, a.ring.zero());
        for (std::size_t j = 1; j <= m; ++j) coeffs[j] = a.value(i, j);
        z.push_back(TruncatedSeries::from_coeffs(a.ring, m, std::move(coeffs)));
    }

    std::vector<TruncatedSeries> residuals;
    residuals.reserve(tri.relation_count());
    for (const auto& f : tri.relations())
        residuals.push_back(evaluate_at_series(f, z));
    return residuals;
}

std::size_t JetProjection::map_index(std::size_t hi_flat) const {
    const std::size_t i = hi_flat / level_hi;
    const std::size_t j = hi_flat % level_hi;
    if (j >= level_lo)
        throw StructuralError("grid variable with j=" + std::to_string(j + 1) +
                              " is forgotten by the projection to level " +
                              std::to_string(level_lo));
    return i * level_lo + j;
}

JetProjection project_jet(const NiceTriplePresentation& tri, std::size_t m_hi,
                          std::size_t m_lo) {
    if (m_lo < 1 || m_hi < m_lo)
        throw PreconditionError("project_jet needs m_hi >= m_lo >= 1");

    JetSystem hi = generate_jet_system(tri, m_hi);
    JetSystem lo = generate_jet_system(tri, m_lo);
    JetProjection proj{m_hi, m_lo, tri.nvars(), false};

    for (std::size_t j = 0; j < hi.relation_count(); ++j) {
        for (std::size_t q = 1; q <= m_lo; ++q) {
            // re-index the level-m_hi cell into the level-m_lo grid
            std::vector<SparsePoly::Term> remapped;
            for (const auto& term : hi.equation(j, q).terms()) {
                Exponents e(tri.nvars() * m_lo, 0);
                for (std::size_t v = 0; v < term.exps.size(); ++v) {
                    if (term.exps[v] == 0) continue;
                    std::size_t jj = v % m_hi;
                    if (jj >= m_lo)
                        throw CertificationError(
                            "dependency bound violated: F_" + std::to_string(j + 1) +
                            "," + std::to_string(q) + " involves A with j=" +
                            std::to_string(jj + 1) + " > q");
                    e[(v / m_hi) * m_lo + jj] = term.exps[v];
                }
                remapped.push_back({std::move(e), term.coeff});
            }
            SparsePoly cell = SparsePoly::from_terms(tri.ring(), tri.nvars() * m_lo,
                                                     std::move(remapped));
            if (!(cell == lo.equation(j, q)))
                throw CertificationError(
                    "truncation certification failed at (j=" + std::to_string(j + 1) +
                    ", q=" + std::to_string(q) + ") between levels " +
                    std::to_string(m_hi) + " and " + std::to_string(m_lo));
        }
    }
    proj.certified = true;
    return proj;
}

NiceTriplePresentation base_change(const NiceTriplePresentation& tri,
                                   const CoefficientRing& target) {
    std::vector<SparsePoly> relations;
    relations.reserve(tri.relation_count());
    for (const auto& f : tri.relations())
        relations.push_back(f.reduce_coefficients(target));
    return NiceTriplePresentation(target, tri.nvars(), std::move(relations),
                                  tri.label());
}

NiceTriplePresentation fiber_at(const NiceTriplePresentation& tri, FiberPoint at) {
    if (tri.ring().kind() != CoefficientRing::Kind::localized_integers)
        throw PreconditionError("fiber_at needs a triple over ZZ_(p), got " +
                                tri.ring().description());
    if (at == FiberPoint::special)
        return base_change(tri, CoefficientRing::prime_field(tri.ring().prime()));
    return base_change(tri, CoefficientRing::rationals());
}

} // namespace arcsmith
