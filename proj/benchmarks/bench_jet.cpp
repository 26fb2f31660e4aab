#include <benchmark/benchmark.h>

#include "arcsmith/jet.hpp"
#include "arcsmith/parse.hpp"

using namespace arcsmith;

namespace {

NiceTriplePresentation an_triple(unsigned n) {
    auto Z = CoefficientRing::integers();
    const std::vector<std::string> vars{"Y1", "Y2", "Y3"};
    return NiceTriplePresentation(
        Z, 3,
        {parse_polynomial("Y1*Y2 - Y3^" + std::to_string(n + 1), Z, vars)},
        "A" + std::to_string(n));
}

void BM_GenerateJetA2(benchmark::State& state) {
    NiceTriplePresentation tri = an_triple(2);
    const auto m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generate_jet_system(tri, m));
}
BENCHMARK(BM_GenerateJetA2)->DenseRange(2, 8, 2);

void BM_ProjectJet(benchmark::State& state) {
    NiceTriplePresentation tri = an_triple(1);
    for (auto _ : state) benchmark::DoNotOptimize(project_jet(tri, 6, 3));
}
BENCHMARK(BM_ProjectJet);

} // namespace
