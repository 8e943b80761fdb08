#include "qadv/and_or_tree.hpp"
#include "qadv/certificates.hpp"
#include "qadv/graph_instances.hpp"
#include "qadv/named_functions.hpp"
#include "qadv/optimizer.hpp"
#include "qadv/verifier.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qadv;

void BM_CertStats(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FunctionTable f = gen_named(NamedFunction::Majority, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cert_stats(f));
  state.SetComplexityN(n);
}
BENCHMARK(BM_CertStats)->DenseRange(5, 11, 2)->Unit(benchmark::kMicrosecond);

void BM_CiExact(benchmark::State& state) {
  const FunctionTable f = AndOrTree(static_cast<int>(state.range(0))).table();
  for (auto _ : state) benchmark::DoNotOptimize(ci_exact(f));
}
BENCHMARK(BM_CiExact)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_ExactAlb1(benchmark::State& state) {
  const FunctionTable f = gen_named(NamedFunction::Parity, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_alb1_small(f));
}
BENCHMARK(BM_ExactAlb1)->Unit(benchmark::kMillisecond);

void BM_BestKnownBound(benchmark::State& state) {
  const FunctionTable f = gen_named(NamedFunction::Parity, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(best_known_bound(f, AscentConfig{}));
}
BENCHMARK(BM_BestKnownBound)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_AscentIterations(benchmark::State& state) {
  const FunctionTable f = gen_named(NamedFunction::Majority, 5, 2);
  std::vector<std::pair<InputIndex, InputIndex>> pairs;
  for (auto x : f.indices_with(Value::Zero)) {
    for (auto y : f.indices_with(Value::One)) pairs.emplace_back(x, y);
  }
  const RelationInstance rel = RelationInstance::from_table(f, pairs);
  const WeightScheme init = WeightScheme::uniform(rel);
  AscentConfig cfg;
  cfg.max_iters = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ascend_scheme(rel, init, cfg));
}
BENCHMARK(BM_AscentIterations)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SweepThree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_total_functions(3, AscentConfig{}));
}
BENCHMARK(BM_SweepThree)->Unit(benchmark::kSecond)->Iterations(1);

void BM_BipartiteMatchingCounting(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_bipartite_matching(n, InstanceMode::Counting, MatchingVariant::TwoPaths, 0, 100));
  }
}
BENCHMARK(BM_BipartiteMatchingCounting)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BipartitenessExplicit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen_bipartiteness(8, InstanceMode::Explicit, 0, 100));
}
BENCHMARK(BM_BipartitenessExplicit)->Unit(benchmark::kMillisecond);

void BM_AndOrSampling(benchmark::State& state) {
  const AndOrTree tree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_certificate_intersections(tree, 10000, 0));
}
BENCHMARK(BM_AndOrSampling)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
