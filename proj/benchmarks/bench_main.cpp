#include <benchmark/benchmark.h>

#include "numsg/census.hpp"
#include "numsg/transforms.hpp"
#include "numsg/trees.hpp"
#include "numsg/wilf.hpp"

using namespace numsg;

namespace {

NumericalSemigroup large_example() {
  std::vector<int> g;
  for (int x = 761; x <= 768; ++x) g.push_back(x);
  for (int x = 11546; x <= 12305; ++x) g.push_back(x);
  return NumericalSemigroup::from_generators(g);
}

void BM_TransformA_Small(benchmark::State& state) {
  const std::vector<int> members{0, 5, 7, 10, 12};
  auto s = NumericalSemigroup::from_small_elements(members, 13);
  for (auto _ : state) benchmark::DoNotOptimize(transform_a(s));
}
BENCHMARK(BM_TransformA_Small);

void BM_LargeInvariants(benchmark::State& state) {
  for (auto _ : state) {
    auto s = large_example();
    benchmark::DoNotOptimize(s.special_gaps().size());
    benchmark::DoNotOptimize(transform_a(s).embedding_dimension());
  }
}
BENCHMARK(BM_LargeInvariants)->Unit(benchmark::kMillisecond);

void BM_ChildrenA(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  auto root = almost_ordinary(g, g / 2);
  for (auto _ : state) benchmark::DoNotOptimize(children_a(root));
}
BENCHMARK(BM_ChildrenA)->Arg(8)->Arg(16)->Arg(24);

void BM_BuildTree(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tree(TreeKind::B, g, g / 2).node_count);
}
BENCHMARK(BM_BuildTree)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_CensusWalk(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_counts(g, CensusMethod::ClassicalWalk).total);
}
BENCHMARK(BM_CensusWalk)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_EliahouScan(benchmark::State& state) {
  ScanOptions o;
  o.eliahou_only = true;
  o.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(scan(static_cast<int>(state.range(0)), o).scanned);
}
BENCHMARK(BM_EliahouScan)->Args({24, 1})->Args({24, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
