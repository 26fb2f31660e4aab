#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "arcsmith/poly.hpp"
#include "arcsmith/ring.hpp"

namespace arcsmith {

// A pair of plane-curve germs at the origin: f, g in K[x,y], both vanishing
// at (0,0). Realizes the length-based local intersection number in the
// curve-on-surface case.
struct LocalPair {
    CoefficientRing field;
    SparsePoly f, g; // 2 variables

    void validate() const;
};

struct MultiplicityResult {
    bool isolated = false;
    std::size_t multiplicity = 0;  // meaningful when isolated
    std::size_t stabilized_at = 0; // first d with D(d) == D(d+1)
};

// Computes D(d) = dim_K K[x,y]/(f, g, m^d) for growing d and returns the
// stabilized value: the length of the local ring at the origin. The m^d
// filtration kills every intersection point away from the origin, so the
// answer is origin-local whatever else f and g share in the chart. When the
// dimensions keep growing past degree_cap, f and g share a branch through
// the origin and the result is "not isolated".
MultiplicityResult local_intersection_multiplicity(const LocalPair& pair,
                                                   std::size_t degree_cap);

struct LabeledPair {
    std::string point;
    LocalPair pair;
};

// Sum of local multiplicities over the supplied points; throws
// PreconditionError naming the first non-isolated point.
std::size_t pairwise_total_intersection(std::span<const LabeledPair> pairs,
                                        std::size_t degree_cap);

} // namespace arcsmith
