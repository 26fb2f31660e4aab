#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arcsmith/parse.hpp"
#include "arcsmith/poly.hpp"
#include "arcsmith/ring.hpp"
#include "arcsmith/series.hpp"

namespace arcsmith {

// A truncated arc: components of a morphism Spec K[[t]] -> A^n, known modulo
// t^(precision+1). An S-arc sends the closed point into the marked subscheme,
// i.e. every component has zero constant term.
class Arc {
public:
    Arc(CoefficientRing field, std::size_t precision,
        std::vector<TruncatedSeries> components);

    const CoefficientRing& field() const { return field_; }
    std::size_t precision() const { return precision_; }
    const std::vector<TruncatedSeries>& components() const { return components_; }
    std::size_t dimension() const { return components_.size(); }

    bool is_s_arc() const;

    bool operator==(const Arc& other) const;

private:
    CoefficientRing field_;
    std::size_t precision_;
    std::vector<TruncatedSeries> components_;
};

// A truncated wedge: components of Spec K[[u,t]] -> A^n modulo
// (u^(prec_u+1), t^(prec_t+1)). Setting u = 0 yields an Arc.
class Wedge {
public:
    Wedge(CoefficientRing field, std::size_t prec_u, std::size_t prec_t,
          std::vector<BiSeries> components);

    const CoefficientRing& field() const { return field_; }
    std::size_t prec_u() const { return prec_u_; }
    std::size_t prec_t() const { return prec_t_; }
    const std::vector<BiSeries>& components() const { return components_; }

private:
    CoefficientRing field_;
    std::size_t prec_u_, prec_t_;
    std::vector<BiSeries> components_;
};

// A chart of a given resolution, with coordinates (u, x1, x2) adapted to the
// exceptional locus: x1 cuts the first exceptional component; in the
// two-component case x2 cuts the second and the u-axis is their intersection.
// Arcs in frame coordinates list components in the order (u, x1, x2).
//
// to_surface / from_surface carry the chart's map data: Y_k as polynomials in
// (u, x1, x2), and the section x_i as rational functions of the Y's. They are
// user-supplied (the tool never computes resolutions) and are only needed for
// wedge-lift sampling; the wedge construction itself uses coordinates alone.
struct ChartFrame {
    enum class Case { single_component, two_components };

    std::string name;
    Case kind = Case::single_component;
    std::array<std::string, 3> coordinates{"u", "x1", "x2"};
    std::vector<SparsePoly> to_surface;       // size n when attached to a triple
    std::vector<RationalFunction> from_surface; // size 2: x1(Y), x2(Y)

    void validate() const;
};

// The explicit wedge of a special-fiber arc: components (u*t, phi1, phi2)
// from an arc (0, phi1, phi2) in frame coordinates. The u-component must
// vanish identically (the arc lies in the special fiber).
Wedge wedge_from_arc(const Arc& arc_in_frame, const ChartFrame& frame);

// Substitutes u = 0. Round trip: specialize_at_zero(wedge_from_arc(a)) == a.
Arc specialize_at_zero(const Wedge& w);

struct GenericFiberWitness {
    bool in_generic_fiber = false; // u-component is a nonzero series
    // certificate: lowest term of the u-component, (deg_u, deg_t, coeff)
    std::optional<std::pair<std::size_t, std::size_t>> lowest_exps;
    std::string lowest_term; // printable form, empty when absent
};

// Witnesses Im(psi) not contained in the special fiber: true iff the
// u-component of the wedge is nonzero.
GenericFiberWitness generic_fiber_witness(const Wedge& w);

// Order of vanishing of g along the arc, computed modulo t^(N+1) where N is
// the arc precision. nullopt means every computed coefficient vanished, i.e.
// the order is >= N+1.
std::optional<std::size_t> contact_order(const Arc& arc, const SparsePoly& g);

} // namespace arcsmith
