#include <benchmark/benchmark.h>

#include "sphinc/decomposition.hpp"
#include "sphinc/distances.hpp"
#include "sphinc/experiment.hpp"
#include "sphinc/generators.hpp"
#include "sphinc/incidence.hpp"

using namespace sphinc;

namespace {

struct RandomInstance {
  PointSet points;
  SphereSet spheres;
};

RandomInstance random_instance(std::size_t size) {
  GeneratorSpec spec;
  spec.count = size;
  spec.seed = 42;
  spec.kind = RandomKind::FreePoints;
  RandomInstance r;
  r.points = gen_random_points(spec);
  spec.kind = RandomKind::SpheresThrough;
  r.spheres = gen_random_spheres(spec, r.points);
  return r;
}

void BM_IncidencesBruteforce(benchmark::State& state) {
  const auto inst = random_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(incidences_bruteforce(inst.points, inst.spheres).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IncidencesBruteforce)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_IncidencesBucketed(benchmark::State& state) {
  const auto inst = random_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(incidences_bucketed(inst.points, inst.spheres).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IncidencesBucketed)->RangeMultiplier(2)->Range(64, 2048)->Unit(benchmark::kMillisecond);

void BM_GridCensus(benchmark::State& state) {
  const PointSet grid = gen_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distinct_distances(grid).distinct());
}
BENCHMARK(BM_GridCensus)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_GridCensusRational(benchmark::State& state) {
  const PointSet grid = gen_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distinct_distances(grid, {1, true}).distinct());
}
BENCHMARK(BM_GridCensusRational)->DenseRange(4, 8, 4)->Unit(benchmark::kMillisecond);

void BM_TorusDecompose(benchmark::State& state) {
  const Instance inst = build_instance(Family::Torus, state.range(0), 42);
  const SurfacePoly* v = inst.variety ? &*inst.variety : nullptr;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(inst.points, inst.spheres, v).blocks.size());
}
BENCHMARK(BM_TorusDecompose)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
