#include "arcsmith/arc.hpp"

#include "arcsmith/errors.hpp"

namespace arcsmith {

Arc::Arc(CoefficientRing field, std::size_t precision,
         std::vector<TruncatedSeries> components)
    : field_(std::move(field)), precision_(precision),
      components_(std::move(components)) {
    if (!field_.is_field())
        throw StructuralError("arcs live over a field; got " + field_.description());
    for (const auto& c : components_) {
        if (!(c.ring() == field_))
            throw StructuralError("arc component ring differs from arc field");
        if (c.precision() != precision_)
            throw StructuralError("arc component precision " +
                                  std::to_string(c.precision()) +
                                  " differs from arc precision " +
                                  std::to_string(precision_));
    }
}

bool Arc::is_s_arc() const {
    for (const auto& c : components_)
        if (!c.has_zero_constant_term()) return false;
    return true;
}

bool Arc::operator==(const Arc& other) const {
    return field_ == other.field_ && precision_ == other.precision_ &&
           components_ == other.components_;
}

Wedge::Wedge(CoefficientRing field, std::size_t prec_u, std::size_t prec_t,
             std::vector<BiSeries> components)
    : field_(std::move(field)), prec_u_(prec_u), prec_t_(prec_t),
      components_(std::move(components)) {
    if (!field_.is_field())
        throw StructuralError("wedges live over a field; got " + field_.description());
    for (const auto& c : components_) {
        if (!(c.ring() == field_))
            throw StructuralError("wedge component ring differs from wedge field");
        if (c.prec_u() != prec_u_ || c.prec_t() != prec_t_)
            throw StructuralError("wedge component precision mismatch");
    }
}

void ChartFrame::validate() const {
    if (name.empty()) throw ConfigError("chart frame needs a name");
    for (const auto& c : coordinates)
        if (c.empty()) throw ConfigError("chart frame '" + name +
                                         "' has an empty coordinate name");
    if (coordinates[0] == coordinates[1] || coordinates[1] == coordinates[2] ||
        coordinates[0] == coordinates[2])
        throw ConfigError("chart frame '" + name + "' repeats a coordinate name");
    if (kind == Case::two_components && coordinates[2].empty())
        throw ConfigError("two-component frame '" + name +
                          "' needs both exceptional coordinates");
    if (!from_surface.empty() && from_surface.size() != 2)
        throw ConfigError("chart frame '" + name +
                          "' needs exactly two from_surface entries (x1, x2)");
    for (const auto& h : to_surface)
        if (h.nvars() != 3)
            throw ConfigError("to_surface entries of frame '" + name +
                              "' must use the three chart coordinates");
}

Wedge wedge_from_arc(const Arc& arc_in_frame, const ChartFrame& frame) {
    frame.validate();
    if (arc_in_frame.dimension() != 3)
        throw StructuralError("an arc in frame coordinates has 3 components (u, " +
                              frame.coordinates[1] + ", " + frame.coordinates[2] +
                              "); got " + std::to_string(arc_in_frame.dimension()));
    const auto& comps = arc_in_frame.components();
    if (!comps[0].is_zero())
        throw PreconditionError(
            "arc does not lie in the special fiber: u-component is " +
            comps[0].str());

    const CoefficientRing& K = arc_in_frame.field();
    const std::size_t prec = arc_in_frame.precision();
    std::vector<BiSeries> out;
    out.reserve(3);
    out.push_back(BiSeries::monomial(K, prec, prec, 1, 1, K.one())); // u*t
    out.push_back(BiSeries::from_t_series(comps[1], prec));
    out.push_back(BiSeries::from_t_series(comps[2], prec));
    return Wedge(K, prec, prec, std::move(out));
}

Arc specialize_at_zero(const Wedge& w) {
    std::vector<TruncatedSeries> comps;
    comps.reserve(w.components().size());
    for (const auto& c : w.components()) comps.push_back(c.at_u_zero());
    return Arc(w.field(), w.prec_t(), std::move(comps));
}

GenericFiberWitness generic_fiber_witness(const Wedge& w) {
    GenericFiberWitness out;
    if (w.components().empty()) return out;
    const BiSeries& u_comp = w.components()[0];
    auto low = u_comp.lowest_term();
    if (!low) return out;
    out.in_generic_fiber = true;
    out.lowest_exps = *low;
    BiSeries lone = BiSeries::monomial(w.field(), w.prec_u(), w.prec_t(),
                                       low->first, low->second,
                                       u_comp.coeff(low->first, low->second));
    out.lowest_term = lone.str();
    return out;
}

std::optional<std::size_t> contact_order(const Arc& arc, const SparsePoly& g) {
    if (g.nvars() != arc.dimension())
        throw StructuralError("polynomial has " + std::to_string(g.nvars()) +
                              " variables, arc has " +
                              std::to_string(arc.dimension()) + " components");
    TruncatedSeries residual = evaluate_at_series(g, arc.components());
    return residual.order();
}

} // namespace arcsmith
