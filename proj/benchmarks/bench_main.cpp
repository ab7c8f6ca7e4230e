#include <benchmark/benchmark.h>

#include "clustertilt/cluster_algebra.hpp"
#include "clustertilt/quiver.hpp"
#include "clustertilt/repcat.hpp"
#include "clustertilt/tilting.hpp"

using namespace clustertilt;

namespace {

DynkinType type_of(const benchmark::State& state) {
  static const char* names[] = {"A4", "D4", "D5", "A6", "D6", "E6"};
  return DynkinType::parse(names[state.range(0)]);
}

void BM_ExploreAtlas(benchmark::State& state) {
  RootSystem rs(type_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(explore(rs).clusters().size());
  state.SetLabel(rs.type().name());
}
BENCHMARK(BM_ExploreAtlas)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_ClusterCategory(benchmark::State& state) {
  RootSystem rs(type_of(state));
  for (auto _ : state) {
    ClusterCategory cc(rs);
    benchmark::DoNotOptimize(cc.object_count());
  }
  state.SetLabel(rs.type().name());
}
BENCHMARK(BM_ClusterCategory)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_QuiverQTAllClusters(benchmark::State& state) {
  RootSystem rs(type_of(state));
  ClusterCategory cc(rs);
  const auto atlas = explore(rs);
  for (auto _ : state)
    for (std::size_t c = 0; c < atlas.clusters().size(); ++c)
      benchmark::DoNotOptimize(quiver_QT(cc, tilting_from_cluster(cc, atlas, c)).quiver.size());
  state.SetLabel(rs.type().name());
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * atlas.clusters().size()));
}
BENCHMARK(BM_QuiverQTAllClusters)->Arg(0)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  RootSystem rs(type_of(state));
  const auto cls = mutation_class(alternating_quiver(rs));
  for (auto _ : state)
    for (const auto& q : cls) benchmark::DoNotOptimize(canonical_form(q).code.size());
  state.SetLabel(rs.type().name());
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * cls.size()));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_MutationClass(benchmark::State& state) {
  RootSystem rs(type_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(mutation_class(alternating_quiver(rs)).size());
  state.SetLabel(rs.type().name());
}
BENCHMARK(BM_MutationClass)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
