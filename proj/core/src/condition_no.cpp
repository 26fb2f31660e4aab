#include "arcsmith/condition_no.hpp"

#include <algorithm>

#include "arcsmith/count.hpp"
#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

constexpr std::size_t kMaxExamples = 8;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = splitmix64(state);
        if (r >= threshold) return r % bound;
    }
}

// a frame with coefficients moved into GF(p)
struct ReducedFrame {
    const ChartFrame* source = nullptr;
    std::vector<SparsePoly> to_surface;
    std::vector<std::pair<SparsePoly, SparsePoly>> section; // (num, den)
};

struct LiftResult {
    bool ok = false;
    std::string witness;
};

LiftResult try_lift(const Arc& alpha, const ReducedFrame& frame, std::size_t m) {
    const CoefficientRing& K = alpha.field();

    // section: x_i = num_i(Y) / den_i(Y) along the arc
    std::vector<TruncatedSeries> xi;
    for (const auto& [num_poly, den_poly] : frame.section) {
        TruncatedSeries num = evaluate_at_series(num_poly, alpha.components());
        TruncatedSeries den = evaluate_at_series(den_poly, alpha.components());
        auto q = series_div(num, den);
        if (!q) return {};
        xi.push_back(std::move(*q));
    }
    std::size_t achieved = std::min(xi[0].precision(), xi[1].precision());
    if (achieved < m) return {};

    std::vector<TruncatedSeries> chart_components{
        TruncatedSeries(K, achieved), xi[0].truncated(achieved),
        xi[1].truncated(achieved)};
    Arc chart_arc(K, achieved, chart_components);

    // roundtrip: the chart point must map back onto the jet through level m
    const std::size_t check = std::min(m, achieved);
    for (std::size_t k = 0; k < frame.to_surface.size(); ++k) {
        TruncatedSeries fwd =
            evaluate_at_series(frame.to_surface[k], chart_arc.components());
        if (!(fwd.truncated(check) == alpha.components()[k].truncated(check)))
            return {};
    }

    Wedge w = wedge_from_arc(chart_arc, *frame.source);
    GenericFiberWitness witness = generic_fiber_witness(w);
    if (!witness.in_generic_fiber) return {}; // cannot happen for u*t
    return {true, witness.lowest_term};
}

} // namespace

ConditionNoEvidence sample_condition_no(const NiceTriplePresentation& tri,
                                        std::size_t m, std::uint64_t q,
                                        std::uint64_t budget,
                                        std::span<const ChartFrame> frames,
                                        std::uint64_t seed,
                                        std::uint64_t enumeration_limit) {
    if (tri.ring().kind() != CoefficientRing::Kind::localized_integers)
        throw PreconditionError("condition-(NO) sampling needs a triple over "
                                "ZZ_(p), got " + tri.ring().description());
    const std::uint64_t p = tri.ring().prime();
    if (q != p)
        throw ConfigError("special-fiber sampling works over GF(p); q=" +
                          std::to_string(q) + " but p=" + std::to_string(p));
    if (frames.empty())
        throw ConfigError("condition-(NO) sampling needs at least one chart frame");

    NiceTriplePresentation special = fiber_at(tri, FiberPoint::special);
    const CoefficientRing& K = special.ring();
    std::vector<ReducedFrame> reduced;
    for (const auto& f : frames) {
        f.validate();
        if (f.to_surface.size() != tri.nvars() || f.from_surface.size() != 2)
            throw ConfigError("frame '" + f.name +
                              "' lacks section data (to_surface/from_surface)");
        ReducedFrame rf;
        rf.source = &f;
        for (const auto& h : f.to_surface)
            rf.to_surface.push_back(h.reduce_coefficients(K));
        for (const auto& r : f.from_surface)
            rf.section.emplace_back(r.num.reduce_coefficients(K),
                                    r.den.reduce_coefficients(K));
        reduced.push_back(std::move(rf));
    }

    ConditionNoEvidence out;
    out.level = m;
    out.p = p;
    out.seed = seed;

    JetSystem js = generate_jet_system(special, m);
    FpJetSystem sys(js);
    const std::size_t nvars = tri.nvars();
    const std::size_t grid_vars = js.grid_var_count();
    const std::size_t arc_prec = 2 * m; // zero-extension of the jet
    const auto names = default_variable_names(nvars);

    auto process_solution = [&](std::span<const std::uint64_t> point) {
        // assemble the arc z_i = sum_j a_ij t^j over GF(p)
        std::vector<TruncatedSeries> comps;
        comps.reserve(nvars);
        for (std::size_t i = 1; i <= nvars; ++i) {
            std::vector<Scalar> c(arc_prec + 1, K.zero());
            for (std::size_t j = 1; j <= m; ++j)
                c[j] = Scalar(point[JetSystem::grid_index(nvars, m, i, j)]);
            comps.push_back(TruncatedSeries::from_coeffs(K, arc_prec, std::move(c)));
        }
        Arc alpha(K, arc_prec, std::move(comps));

        LiftExample example;
        for (const auto& c : alpha.components())
            example.arc_components.push_back(c.str());
        for (const auto& rf : reduced) {
            LiftResult r = try_lift(alpha, rf, m);
            if (r.ok) {
                example.lifted = true;
                example.frame = rf.source->name;
                example.wedge_u_term = r.witness;
                break;
            }
        }
        ++out.attempted;
        if (example.lifted) ++out.lifted;
        if (out.examples.size() < kMaxExamples)
            out.examples.push_back(std::move(example));
    };

    mpz_class grid = 1;
    for (std::size_t v = 0; v < grid_vars; ++v)
        grid *= static_cast<unsigned long>(p);

    if (budget == 0) {
        out.exhaustive = false;
        return out;
    }

    if (grid <= enumeration_limit) {
        const std::uint64_t total = grid.get_ui();
        std::vector<std::uint64_t> point(grid_vars, 0);
        bool cut_short = false;
        for (std::uint64_t i = 0; i < total; ++i) {
            ++out.grid_points_checked;
            if (sys.is_solution(point)) {
                if (out.attempted >= budget) {
                    cut_short = true;
                    break;
                }
                process_solution(point);
            }
            // odometer, last variable fastest
            for (std::size_t v = grid_vars; v-- > 0;) {
                if (++point[v] < p) break;
                point[v] = 0;
            }
        }
        out.exhaustive = !cut_short;
    } else {
        out.exhaustive = false;
        std::vector<std::uint64_t> point(grid_vars, 0);
        for (std::uint64_t i = 0; i < budget; ++i) {
            std::uint64_t state = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
            splitmix64(state);
            for (std::size_t v = 0; v < grid_vars; ++v) point[v] = bounded(state, p);
            ++out.grid_points_checked;
            if (sys.is_solution(point)) process_solution(point);
        }
    }
    return out;
}

} // namespace arcsmith
