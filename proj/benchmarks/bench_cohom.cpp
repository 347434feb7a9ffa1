#include <cohom/complex.hpp>
#include <cohom/linalg.hpp>
#include <cohom/reduced.hpp>

#include <benchmark/benchmark.h>

using namespace cohom;

namespace {

Weights singular(unsigned n, unsigned k)
{
    Weights w;
    for (unsigned i = 0; i < n; ++i)
        w.lambdas.push_back(Rational(-static_cast<long>(i % k), 2));
    w.mu = Rational(k);
    for (const auto& l : w.lambdas)
        w.mu += l;
    return w;
}

void BM_SystemRank(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto k = static_cast<unsigned>(state.range(1));
    const Weights w = singular(n, k);
    const LinearSystem sys = build_system(n, k, w.lambdas);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(sys.matrix));
    state.counters["rows"] = static_cast<double>(sys.matrix.rows());
    state.counters["cols"] = static_cast<double>(sys.matrix.cols());
}
BENCHMARK(BM_SystemRank)->Args({2, 5})->Args({3, 5})->Args({4, 5})->Args({5, 6})->Unit(benchmark::kMicrosecond);

void BM_BruteForceH2(benchmark::State& state)
{
    const auto n = static_cast<unsigned>(state.range(0));
    const auto k = static_cast<unsigned>(state.range(1));
    const Weights w = singular(n, k);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_h2(w));
}
BENCHMARK(BM_BruteForceH2)->Args({1, 3})->Args({2, 2})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_CocycleBasis(benchmark::State& state)
{
    const Weights w = singular(3, static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(cocycle_basis(w));
}
BENCHMARK(BM_CocycleBasis)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
