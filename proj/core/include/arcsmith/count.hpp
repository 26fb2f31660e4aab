#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "arcsmith/jet.hpp"

namespace arcsmith {

// Jet system compiled for fast evaluation over GF(p): coefficients as raw
// residues, terms as (variable, exponent) lists. Identically-zero cells are
// dropped (they never veto a point).
class FpJetSystem {
public:
    explicit FpJetSystem(const JetSystem& js); // js must be over GF(p)

    std::uint64_t p() const { return p_; }
    std::size_t var_count() const { return var_count_; }
    bool is_solution(std::span<const std::uint64_t> point) const;

private:
    struct Term {
        std::uint64_t coeff;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> powers; // (var, exp)
    };
    std::vector<std::vector<Term>> cells_;
    std::uint64_t p_ = 0;
    std::size_t var_count_ = 0;
};

struct CountOptions {
    std::uint64_t exhaustive_limit = 100'000'000; // 10^8 grid points
    unsigned threads = 0;                         // 0 = hardware concurrency
};

struct CountResult {
    bool exhaustive = true;
    std::uint64_t count = 0; // exact, exhaustive mode only
    // sampled mode
    std::uint64_t samples = 0, hits = 0, seed = 0;
    double estimate = 0, ci_low = 0, ci_high = 0; // 95% normal approximation
    mpz_class grid_size;
};

// Exact solution count of {F_jq = 0 for all j, q} over GF(q) by exhaustive
// enumeration in row-major order (last grid variable fastest). The grid is
// partitioned into contiguous blocks across worker threads; partial counts
// are summed, so the result does not depend on scheduling. Throws
// ResourceLimitError when q^(n*m) exceeds the configured limit.
CountResult count_points(const JetSystem& js, const CountOptions& opts = {});

// Unbiased estimate from `samples` uniform draws. Each sample index derives
// its own generator from (seed, index), so results are independent of the
// worker partition.
CountResult count_points_sampled(const JetSystem& js, std::uint64_t samples,
                                 std::uint64_t seed,
                                 const CountOptions& opts = {});

// One row of the Lang-Weil style probe table: log_q of the point count
// approximates the dimension. Heuristic by construction; never a theorem.
struct ProbeRow {
    std::uint64_t q = 0;
    std::size_t m = 0;
    CountResult count;
    std::optional<double> log_q;       // absent when the count is 0 or skipped
    std::optional<double> delta_vs_prev_level;
    bool skipped = false; // grid too large and no sampling budget given
};

struct DimensionProbe {
    std::vector<ProbeRow> rows;
};

// Counts (or estimates) jet-scheme points of tri's reductions over GF(q) for
// each prime q and level m. sample_budget == 0 skips any (q, m) whose grid
// exceeds the exhaustive limit.
DimensionProbe dimension_probe(const NiceTriplePresentation& tri,
                               std::span<const std::uint64_t> primes,
                               std::span<const std::size_t> levels,
                               const CountOptions& opts = {},
                               std::uint64_t sample_budget = 0,
                               std::uint64_t seed = 0);

} // namespace arcsmith
