#pragma once

#include <string>
#include <vector>

#include "arcsmith/poly.hpp"
#include "arcsmith/ring.hpp"
#include "arcsmith/series.hpp"

namespace arcsmith {

// Finite presentation of a nice triple (R, I, Lambda):
//   R = Lambda[[Y1..Yn]] / (f1..fs),  I = (Y1..Yn)R,  Lambda = R/I.
// Every relation has zero constant term (forced by Lambda ~ R/I), so every
// formal power series relation may be pre-truncated to a polynomial without
// changing any finite jet level.
class NiceTriplePresentation {
public:
    NiceTriplePresentation(CoefficientRing ring, std::size_t nvars,
                           std::vector<SparsePoly> relations, std::string label);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<SparsePoly>& relations() const { return relations_; }
    std::size_t relation_count() const { return relations_.size(); }
    const std::string& label() const { return label_; }

    std::vector<std::string> variable_names() const {
        return default_variable_names(nvars_);
    }

private:
    CoefficientRing ring_;
    std::size_t nvars_;
    std::vector<SparsePoly> relations_;
    std::string label_;
};

// The level-m jet equations of a presented triple: polynomials F_jq in the
// grid variables A_ij (i = 1..n, j = 1..m) over Lambda, defined by
//   f_j(sum_j A_1j t^j, ..., sum_j A_nj t^j) = sum_q F_jq(A) t^q
// in Lambda[A][t]/(t^(m+1)). The coefficient of t^0 vanishes identically and
// is not stored; the grid holds q = 1..m. Zero cells are kept so grid shapes
// are stable across levels and base change.
class JetSystem {
public:
    JetSystem(CoefficientRing ring, std::size_t nvars, std::size_t level,
              std::vector<std::vector<SparsePoly>> equations);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }   // n
    std::size_t level() const { return level_; }   // m
    std::size_t relation_count() const { return equations_.size(); } // s

    // j in [0, s), q in [1, m]
    const SparsePoly& equation(std::size_t j, std::size_t q) const;
    const std::vector<std::vector<SparsePoly>>& equations() const {
        return equations_;
    }

    std::size_t grid_var_count() const { return nvars_ * level_; }
    // Flat index of A_{i,j} with i in [1,n], j in [1,m].
    static std::size_t grid_index(std::size_t n, std::size_t m, std::size_t i,
                                  std::size_t j);
    std::vector<std::string> variable_names() const;

    bool operator==(const JetSystem& other) const;

private:
    CoefficientRing ring_;
    std::size_t nvars_, level_;
    std::vector<std::vector<SparsePoly>> equations_; // [j][q-1]
};

// Names for the grid variables A_ij at shape (n, m): "A23" while both
// indices fit in one digit, "A2_13" otherwise.
std::vector<std::string> jet_variable_names(std::size_t n, std::size_t m);

// Values a_ij in a Lambda-algebra A, shaped like a level-m jet grid.
struct ArcAssignment {
    CoefficientRing ring; // A
    std::size_t nvars = 0;
    std::size_t level = 0;
    std::vector<Scalar> values; // flat, indexed by JetSystem::grid_index

    const Scalar& value(std::size_t i, std::size_t j) const {
        return values[JetSystem::grid_index(nvars, level, i, j)];
    }
};

// Drops every monomial of f of total degree > m; at level m the dropped
// monomials evaluate to 0 on any jet substitution.
SparsePoly truncate_relation(const SparsePoly& f, std::size_t m);

// Expands f_j(sum A_ij t^j) over Lambda[A][t]/(t^(m+1)) and collects the
// coefficient polynomials F_jq. Requires m >= 1.
JetSystem generate_jet_system(const NiceTriplePresentation& tri, std::size_t m);

// Evaluates each relation at z_i = sum_j a_ij t^j in A[t]/(t^(m+1)) and
// returns the residual series. All residuals vanish iff the assignment is a
// point of the level-m jet scheme (the functor-of-points contract).
std::vector<TruncatedSeries> evaluate_arc(const NiceTriplePresentation& tri,
                                          const ArcAssignment& a, std::size_t m);

// The truncation map between jet levels m_hi >= m_lo: grid variables A_ij
// with j <= m_lo are kept, the rest are forgotten. Construction certifies
// that F_jq agrees across the two levels for q <= m_lo (exact polynomial
// identity); a mismatch is an internal generation bug.
struct JetProjection {
    std::size_t level_hi = 0, level_lo = 0;
    std::size_t nvars = 0;
    bool certified = false;

    // maps a level_hi flat grid index with j <= level_lo to the level_lo one
    std::size_t map_index(std::size_t hi_flat) const;
};

JetProjection project_jet(const NiceTriplePresentation& tri, std::size_t m_hi,
                          std::size_t m_lo);

// Tensors the presentation along the canonical map Lambda -> target:
// relations map termwise; jet generation commutes with this operation.
NiceTriplePresentation base_change(const NiceTriplePresentation& tri,
                                   const CoefficientRing& target);

enum class FiberPoint { special, generic };

// For a triple over ZZ_(p): the fiber at the closed point (residue field
// GF(p)) or at the generic point (QQ) of Spec ZZ_(p).
NiceTriplePresentation fiber_at(const NiceTriplePresentation& tri, FiberPoint at);

} // namespace arcsmith
