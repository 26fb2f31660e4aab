#include <benchmark/benchmark.h>

#include "arcsmith/count.hpp"
#include "arcsmith/parse.hpp"

using namespace arcsmith;

namespace {

JetSystem a1_system(std::uint64_t q, std::size_t m) {
    auto Fq = CoefficientRing::prime_field(q);
    const std::vector<std::string> vars{"Y1", "Y2", "Y3"};
    NiceTriplePresentation tri(Fq, 3,
                               {parse_polynomial("Y1*Y2 - Y3^2", Fq, vars)}, "A1");
    return generate_jet_system(tri, m);
}

void BM_CountExhaustiveA1(benchmark::State& state) {
    JetSystem js = a1_system(3, static_cast<std::size_t>(state.range(0)));
    CountOptions opts;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(count_points(js, opts));
}
BENCHMARK(BM_CountExhaustiveA1)->Arg(2)->Arg(3);

void BM_CountSampledA1(benchmark::State& state) {
    JetSystem js = a1_system(5, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_points_sampled(js, 10000, 42));
}
BENCHMARK(BM_CountSampledA1);

} // namespace
