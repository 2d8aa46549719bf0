#include <benchmark/benchmark.h>

#include "kronreal/factorization.hpp"
#include "kronreal/instances.hpp"
#include "kronreal/random.hpp"

namespace {

using namespace kronreal;

void BM_FactorizeGivenT(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(11);
    const FactorizationInstance inst = make_factorization_instance(rng, {n, 2, n, 2});
    for (auto _ : state) benchmark::DoNotOptimize(tensor_factorize(inst.problem));
}
BENCHMARK(BM_FactorizeGivenT)->DenseRange(1, 4);

// Search cost grows with the number of eigenvector subsets of the state space.
void BM_ProjectionSearch(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(12);
    const FactorizationInstance inst = make_factorization_instance(rng, {n, 1, n, 1});
    const Realization& f = inst.problem.f;
    const Realization& fi = inst.problem.f_inverse;
    const FactorDims& d = inst.problem.dims;
    for (auto _ : state) benchmark::DoNotOptimize(search_supporting_projections(f.A(), fi.A(), d.alpha(), d.beta()));
}
BENCHMARK(BM_ProjectionSearch)->DenseRange(1, 4);

}  // namespace
