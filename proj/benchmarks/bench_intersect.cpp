#include <benchmark/benchmark.h>

#include "arcsmith/intersect.hpp"
#include "arcsmith/parse.hpp"

using namespace arcsmith;

namespace {

void BM_Multiplicity(benchmark::State& state) {
    auto Q = CoefficientRing::rationals();
    const std::vector<std::string> xy{"x", "y"};
    LocalPair pair{Q, parse_polynomial("y^2 - x^3", Q, xy),
                   parse_polynomial("y^3 - x^5", Q, xy)};
    for (auto _ : state)
        benchmark::DoNotOptimize(local_intersection_multiplicity(pair, 24));
}
BENCHMARK(BM_Multiplicity);

} // namespace

BENCHMARK_MAIN();
