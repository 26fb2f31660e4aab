#include "arcsmith/count.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "arcsmith/errors.hpp"

namespace arcsmith {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// uniform draw in [0, bound) by rejection
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = splitmix64(state);
        if (r >= threshold) return r % bound;
    }
}

unsigned worker_count(const CountOptions& opts, std::uint64_t work_items) {
    unsigned hw = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<unsigned>(
        std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, work_items)));
}

void decode_point(std::uint64_t index, std::uint64_t q,
                  std::span<std::uint64_t> point) {
    for (std::size_t v = point.size(); v-- > 0;) {
        point[v] = index % q;
        index /= q;
    }
}

// advance the odometer (last variable fastest)
void step_point(std::span<std::uint64_t> point, std::uint64_t q) {
    for (std::size_t v = point.size(); v-- > 0;) {
        if (++point[v] < q) return;
        point[v] = 0;
    }
}

} // namespace

FpJetSystem::FpJetSystem(const JetSystem& js) {
    if (js.ring().kind() != CoefficientRing::Kind::prime_field)
        throw StructuralError("point counting needs a jet system over GF(p), got " +
                              js.ring().description());
    p_ = js.ring().prime();
    var_count_ = js.grid_var_count();
    for (std::size_t j = 0; j < js.relation_count(); ++j) {
        for (std::size_t q = 1; q <= js.level(); ++q) {
            const SparsePoly& cell = js.equation(j, q);
            if (cell.is_zero()) continue;
            std::vector<Term> compiled;
            compiled.reserve(cell.terms().size());
            for (const auto& t : cell.terms()) {
                Term ct{t.coeff.residue(), {}};
                for (std::uint32_t v = 0; v < t.exps.size(); ++v)
                    if (t.exps[v] > 0) ct.powers.emplace_back(v, t.exps[v]);
                compiled.push_back(std::move(ct));
            }
            cells_.push_back(std::move(compiled));
        }
    }
}

bool FpJetSystem::is_solution(std::span<const std::uint64_t> point) const {
    for (const auto& cell : cells_) {
        std::uint64_t acc = 0;
        for (const auto& term : cell) {
            std::uint64_t prod = term.coeff;
            for (auto [v, e] : term.powers) {
                std::uint64_t x = point[v];
                if (x == 0) {
                    prod = 0;
                    break;
                }
                for (std::uint32_t k = 0; k < e; ++k) prod = mul_mod(prod, x, p_);
            }
            acc += prod;
            if (acc >= p_) acc -= p_;
        }
        if (acc != 0) return false;
    }
    return true;
}

CountResult count_points(const JetSystem& js, const CountOptions& opts) {
    FpJetSystem sys(js);
    const std::uint64_t q = sys.p();
    const std::size_t nvars = sys.var_count();

    mpz_class grid = 1;
    for (std::size_t v = 0; v < nvars; ++v) grid *= static_cast<unsigned long>(q);
    if (grid > opts.exhaustive_limit)
        throw ResourceLimitError(
            "exhaustive enumeration of " + grid.get_str() +
            " points exceeds the limit " + std::to_string(opts.exhaustive_limit) +
            " (raise ARCSMITH_LIMIT or use sampling)");
    const std::uint64_t total = grid.get_ui();

    const unsigned workers = worker_count(opts, total);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers, extra = total % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t len = chunk + (w < extra ? 1 : 0);
        const std::uint64_t end = begin + len;
        pool.emplace_back([&, w, begin, end] {
            std::vector<std::uint64_t> point(nvars, 0);
            decode_point(begin, q, point);
            std::uint64_t hits = 0;
            for (std::uint64_t i = begin; i < end; ++i) {
                if (sys.is_solution(point)) ++hits;
                step_point(point, q);
            }
            partial[w] = hits;
        });
        begin = end;
    }
    for (auto& t : pool) t.join();

    CountResult out;
    out.exhaustive = true;
    out.grid_size = grid;
    for (std::uint64_t h : partial) out.count += h;
    return out;
}

CountResult count_points_sampled(const JetSystem& js, std::uint64_t samples,
                                 std::uint64_t seed, const CountOptions& opts) {
    FpJetSystem sys(js);
    const std::uint64_t q = sys.p();
    const std::size_t nvars = sys.var_count();

    mpz_class grid = 1;
    for (std::size_t v = 0; v < nvars; ++v) grid *= static_cast<unsigned long>(q);

    const unsigned workers = worker_count(opts, samples);
    std::vector<std::uint64_t> partial(std::max(1u, workers), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = workers ? samples / workers : 0,
                        extra = workers ? samples % workers : 0;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t len = chunk + (w < extra ? 1 : 0);
        const std::uint64_t end = begin + len;
        pool.emplace_back([&, w, begin, end] {
            std::vector<std::uint64_t> point(nvars, 0);
            std::uint64_t hits = 0;
            for (std::uint64_t i = begin; i < end; ++i) {
                // per-index stream: the draw is a pure function of (seed, i)
                std::uint64_t state = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
                splitmix64(state);
                for (std::size_t v = 0; v < nvars; ++v) point[v] = bounded(state, q);
                if (sys.is_solution(point)) ++hits;
            }
            partial[w] = hits;
        });
        begin = end;
    }
    for (auto& t : pool) t.join();

    CountResult out;
    out.exhaustive = false;
    out.grid_size = grid;
    out.samples = samples;
    out.seed = seed;
    for (std::uint64_t h : partial) out.hits += h;
    if (samples > 0) {
        const double g = grid.get_d();
        const double phat = static_cast<double>(out.hits) / static_cast<double>(samples);
        const double half =
            1.96 * std::sqrt(std::max(0.0, phat * (1.0 - phat) /
                                               static_cast<double>(samples)));
        out.estimate = phat * g;
        out.ci_low = std::max(0.0, phat - half) * g;
        out.ci_high = std::min(1.0, phat + half) * g;
    }
    return out;
}

DimensionProbe dimension_probe(const NiceTriplePresentation& tri,
                               std::span<const std::uint64_t> primes,
                               std::span<const std::size_t> levels,
                               const CountOptions& opts,
                               std::uint64_t sample_budget, std::uint64_t seed) {
    DimensionProbe probe;
    for (std::uint64_t q : primes) {
        CoefficientRing fq = CoefficientRing::prime_field(q);
        if (!has_coefficient_hom(tri.ring(), fq)) continue;
        NiceTriplePresentation reduced = base_change(tri, fq);
        std::optional<double> prev;
        for (std::size_t m : levels) {
            JetSystem js = generate_jet_system(reduced, m);
            ProbeRow row;
            row.q = q;
            row.m = m;
            mpz_class grid = 1;
            for (std::size_t v = 0; v < js.grid_var_count(); ++v)
                grid *= static_cast<unsigned long>(q);
            if (grid <= opts.exhaustive_limit) {
                row.count = count_points(js, opts);
            } else if (sample_budget > 0) {
                row.count = count_points_sampled(js, sample_budget, seed, opts);
            } else {
                row.skipped = true;
                probe.rows.push_back(std::move(row));
                prev.reset();
                continue;
            }
            const double n = row.count.exhaustive
                                 ? static_cast<double>(row.count.count)
                                 : row.count.estimate;
            if (n > 0) {
                row.log_q = std::log(n) / std::log(static_cast<double>(q));
                if (prev) row.delta_vs_prev_level = *row.log_q - *prev;
                prev = row.log_q;
            } else {
                prev.reset();
            }
            probe.rows.push_back(std::move(row));
        }
    }
    return probe;
}

} // namespace arcsmith
