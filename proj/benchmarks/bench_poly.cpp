#include <benchmark/benchmark.h>

#include <random>

#include "arcsmith/poly.hpp"

using namespace arcsmith;

namespace {

SparsePoly random_poly(const CoefficientRing& ring, std::mt19937_64& rng,
                       std::size_t nvars, int nterms, int max_exp) {
    std::vector<SparsePoly::Term> terms;
    for (int t = 0; t < nterms; ++t) {
        Exponents e(nvars);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_exp + 1));
        terms.push_back({std::move(e),
                         ring.from_int(static_cast<long>(rng() % 19) - 9)});
    }
    return SparsePoly::from_terms(ring, nvars, std::move(terms));
}

void BM_PolyMulZZ(benchmark::State& state) {
    std::mt19937_64 rng(1);
    auto Z = CoefficientRing::integers();
    SparsePoly a = random_poly(Z, rng, 4, static_cast<int>(state.range(0)), 3);
    SparsePoly b = random_poly(Z, rng, 4, static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMulZZ)->Arg(8)->Arg(32)->Arg(128);

void BM_PolyMulGF5(benchmark::State& state) {
    std::mt19937_64 rng(2);
    auto F5 = CoefficientRing::prime_field(5);
    SparsePoly a = random_poly(F5, rng, 4, static_cast<int>(state.range(0)), 3);
    SparsePoly b = random_poly(F5, rng, 4, static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMulGF5)->Arg(8)->Arg(32)->Arg(128);

} // namespace
