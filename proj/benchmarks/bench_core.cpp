#include <benchmark/benchmark.h>

#include "condsym/lie.hpp"
#include "condsym/normal.hpp"
#include "condsym/parser.hpp"
#include "condsym/reduction.hpp"
#include "condsym/waveforms.hpp"

using namespace condsym;

static void BM_NormalizeReducedEquation(benchmark::State& state) {
    Expr e = parse("(1+2*alpha)*w1*D[phi,1] + (1+2*alpha)*w2*D[phi,2] + "
                   "w1^2*D[phi,1,1] + 2*w1*w2*D[phi,1,2] + w2^2*D[phi,2,2] + "
                   "alpha*(alpha+1)*phi - D[phi,1,1] - D[phi,2,2]");
    for (auto _ : state) benchmark::DoNotOptimize(normalize(e));
}
BENCHMARK(BM_NormalizeReducedEquation);

static void BM_Anz1Reduction(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto wave = waveforms::build_wave(n);
    auto ansatz = reduction::ansatz_anz1(n, ex::symbol(sym::beta()));
    for (auto _ : state)
        benchmark::DoNotOptimize(reduction::substitute_ansatz(wave, ansatz));
}
BENCHMARK(BM_Anz1Reduction)->Arg(2)->Arg(3)->Arg(4);

static void BM_Prolong2(benchmark::State& state) {
    auto v = waveforms::op_D(3, ex::symbol(sym::alpha()));
    for (auto _ : state) benchmark::DoNotOptimize(lie::prolong2(v));
}
BENCHMARK(BM_Prolong2);

static void BM_SymbolicInvariance(benchmark::State& state) {
    auto sys = waveforms::with_condition(waveforms::build_wave(3),
                                         waveforms::make_add1(3, ex::symbol(sym::alpha())));
    auto v = waveforms::op_D(3, ex::symbol(sym::alpha()));
    for (auto _ : state)
        benchmark::DoNotOptimize(lie::check_invariance_symbolic(sys, v));
}
BENCHMARK(BM_SymbolicInvariance);

static void BM_ManifoldSample(benchmark::State& state) {
    auto sys = waveforms::with_condition(waveforms::build_wave(3),
                                         waveforms::make_add1(3, ex::rat(0)));
    auto region = lie::Region::defaults(3);
    std::map<Sym, double> params{{sym::alpha(), 0.0}};
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(lie::sample_on_manifold(sys, region, seed++, params));
}
BENCHMARK(BM_ManifoldSample);

static void BM_Quadrature(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            numerics::quadrature([](double t) { return 1.0 / (t * t - 1.0); }, 2, 6, 1e-10));
}
BENCHMARK(BM_Quadrature);

BENCHMARK_MAIN();
