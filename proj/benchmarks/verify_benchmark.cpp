#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "builders.hpp"
#include "generators.hpp"
#include "sftconj/sftconj.hpp"

using namespace sftconj;
using namespace sftconj::testing;

namespace {

struct Instance {
  DirectedGraph g, h;
  BlockMap phi;
};

// A relabelled copy, so verify has to run every stage.
Instance relabelled(std::size_t n) {
  std::mt19937_64 rng(n);
  Instance in{random_irreducible(rng, n, n + n / 2), {}, BlockMap(1, 0)};
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  in.h = relabel(in.g, perm, "r");
  for (VertexId v = 0; v < n; ++v) in.phi.set({in.g.name(v)}, in.h.name(perm[v]));
  return in;
}

void BM_VerifyIrreducible(benchmark::State& state) {
  Instance in = relabelled(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify(in.g, in.h, in.phi));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifyIrreducible)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_VerifyReducible(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  // Two irreducible halves joined by one edge.
  DirectedGraph g = random_irreducible(rng, n / 2, n / 2);
  DirectedGraph right = random_irreducible(rng, n - n / 2, n / 2);
  for (const auto& name : right.names()) g.add_vertex("r" + name);
  for (auto [a, b] : right.edges()) g.add_edge("r" + right.name(a), "r" + right.name(b));
  g.add_edge(g.name(0), "r" + right.name(0));
  auto q = minimal_image_graph(g, random_partition(rng, n, n - n / 4));
  for (auto _ : state) benchmark::DoNotOptimize(verify(g, q.image, q.map));
}
BENCHMARK(BM_VerifyReducible)->Arg(16)->Arg(32)->Arg(64);

void BM_TracePowers(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  DirectedGraph g = random_irreducible(rng, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(trace_powers(g, n));
}
BENCHMARK(BM_TracePowers)->Arg(16)->Arg(64)->Arg(128);

void BM_DecideGolden(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decide_k_block_conjugacy(golden_left(), golden_mean(), k));
}
BENCHMARK(BM_DecideGolden)->Arg(1)->Arg(2);

void BM_HittingSetSchedule(benchmark::State& state) {
  HittingSetReduction r = hitting_set_reduction(two_set_instance(), static_cast<std::size_t>(state.range(0)));
  auto steps = activation_schedule(r, {"u2"});
  for (auto _ : state) benchmark::DoNotOptimize(apply_amalgamations(r.graph, steps));
}
BENCHMARK(BM_HittingSetSchedule)->Arg(4)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
