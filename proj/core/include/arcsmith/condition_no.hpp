#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arcsmith/arc.hpp"
#include "arcsmith/jet.hpp"

namespace arcsmith {

struct LiftExample {
    std::vector<std::string> arc_components; // in surface coordinates
    bool lifted = false;
    std::string frame;        // frame that succeeded (empty when none)
    std::string wedge_u_term; // witness: lowest term of the wedge u-component
};

// Sampled wedge-lifting evidence for Condition (NO) on the special fiber:
// never a proof, and reported as such.
struct ConditionNoEvidence {
    std::size_t level = 0;
    std::uint64_t p = 0;
    bool exhaustive = false; // every special-fiber jet solution was processed
    std::uint64_t grid_points_checked = 0;
    std::uint64_t attempted = 0; // solutions processed (each gets lift attempts)
    std::uint64_t lifted = 0;
    std::uint64_t seed = 0;
    std::vector<LiftExample> examples; // first few attempts, for the report

    static constexpr const char* kDisclaimer = "finite-level evidence, not a proof";
};

// Enumerates (or samples, beyond `enumeration_limit` grid points)
// special-fiber jet solutions of tri over GF(p) at level m, then tries to
// witness each as the u=0 specialization of a wedge poking out of the special
// fiber: some frame's from_surface section must divide cleanly at working
// precision 2m and the to_surface roundtrip must reproduce the jet mod
// t^(m+1). Processing stops after `budget` solutions.
//
// q names the sampling field and must equal p. Frames must carry section
// data (to_surface and from_surface).
ConditionNoEvidence sample_condition_no(const NiceTriplePresentation& tri,
                                        std::size_t m, std::uint64_t q,
                                        std::uint64_t budget,
                                        std::span<const ChartFrame> frames,
                                        std::uint64_t seed,
                                        std::uint64_t enumeration_limit =
                                            100'000'000);

} // namespace arcsmith
