#include "isolation/constructive.hpp"
#include "isolation/cycles.hpp"
#include "isolation/exact.hpp"
#include "isolation/generators.hpp"

#include <benchmark/benchmark.h>

using namespace isolation;

namespace {

void iota_exact_sparse(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_admissible(n, static_cast<std::size_t>(n + n / 4), AdmissibleClass::c6_free, 17);
    for (auto _ : state)
        benchmark::DoNotOptimize(iota_exact(g, 1).size());
}
BENCHMARK(iota_exact_sparse)->Arg(16)->Arg(24)->Arg(32)->Arg(40);

void subset_enumeration(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_admissible(n, static_cast<std::size_t>(n + 3), AdmissibleClass::c6_free, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(iota_exact(g, 1, ExactMethod::subset_enumeration).size());
}
BENCHMARK(subset_enumeration)->Arg(12)->Arg(16)->Arg(20);

void construct_track(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    const Track track = state.range(1) ? Track::thm17 : Track::thm16;
    const auto cls = state.range(1) ? AdmissibleClass::induced56_free : AdmissibleClass::c6_free;
    const Graph g = random_admissible(n, static_cast<std::size_t>(n + n / 5), cls, 9);
    for (auto _ : state)
        benchmark::DoNotOptimize(construct(g, track).witness.size());
}
BENCHMARK(construct_track)->ArgsProduct({{20, 40, 60}, {0, 1}});

void admissibility(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    const Graph g = random_admissible(n, static_cast<std::size_t>(2 * n), AdmissibleClass::induced56_free, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_admissibility(g).c6_free);
}
BENCHMARK(admissibility)->Arg(20)->Arg(40)->Arg(60);

void enumerate_connected_graphs(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_connected(n).size());
}
BENCHMARK(enumerate_connected_graphs)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

} // namespace
