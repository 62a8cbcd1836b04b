#include <benchmark/benchmark.h>

#include "symbreak/graph6.hpp"
#include "symbreak/join_partition.hpp"

using namespace symbreak;

namespace {

void BM_AutomorphismsCycle(benchmark::State& state) {
  auto g = cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g).order());
}
BENCHMARK(BM_AutomorphismsCycle)->Arg(8)->Arg(12)->Arg(16);

void BM_AutomorphismsComplete(benchmark::State& state) {
  auto g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g).order());
}
BENCHMARK(BM_AutomorphismsComplete)->Arg(6)->Arg(8);

void BM_DistinguishingNumberJoin(benchmark::State& state) {
  auto jg = join(star(3), star(3));
  auto group = automorphisms(jg.graph);
  for (auto _ : state)
    benchmark::DoNotOptimize(distinguishing_number(jg.graph, group).value);
}
BENCHMARK(BM_DistinguishingNumberJoin);

void BM_DistinguishingIndexFriendship(benchmark::State& state) {
  auto g = friendship(static_cast<int>(state.range(0)));
  auto group = automorphisms(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(distinguishing_index(g, group).value.value_or(-1));
}
BENCHMARK(BM_DistinguishingIndexFriendship)->Arg(2)->Arg(3)->Arg(4);

void BM_GammaStructure(benchmark::State& state) {
  auto jg = join(friendship(2), friendship(3));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_structure(jg).q);
}
BENCHMARK(BM_GammaStructure);

void BM_CanonicalForm(benchmark::State& state) {
  auto g = cartesian_product(complete(3), complete(4));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).size());
}
BENCHMARK(BM_CanonicalForm);

void BM_Graph6RoundTrip(benchmark::State& state) {
  auto g = cartesian_product(complete(3), complete(4));
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(write_graph6(g)).order());
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace

BENCHMARK_MAIN();
