#include <benchmark/benchmark.h>

#include "conicnet/audit.hpp"
#include "conicnet/classify.hpp"
#include "conicnet/orbits.hpp"

using namespace conicnet;

namespace {

// Sigma12 has the longest path through the decision tree.
void BM_ClassifyPlane(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<int>(state.range(0)));
  const Subspace s = plane_representative(f, PlaneLabel::Sigma12).subspace;
  for (auto _ : state) benchmark::DoNotOptimize(classify_plane(f, s));
}
BENCHMARK(BM_ClassifyPlane)->Arg(5)->Arg(7)->Arg(13);

void BM_ClassifyLine(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<int>(state.range(0)));
  const Subspace s = line_representative(f, LineLabel::o16).subspace;
  for (auto _ : state) benchmark::DoNotOptimize(classify_line(f, s));
}
BENCHMARK(BM_ClassifyLine)->Arg(5)->Arg(13);

void BM_Distribution(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<int>(state.range(0)));
  const Subspace s = plane_representative(f, PlaneLabel::Sigma2).subspace;
  for (auto _ : state) benchmark::DoNotOptimize(distribution(f, s));
}
BENCHMARK(BM_Distribution)->Arg(5)->Arg(13);

void BM_OrbitOf(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<int>(state.range(0)));
  const Subspace s = plane_representative(f, PlaneLabel::Sigma10).subspace;
  for (auto _ : state) benchmark::DoNotOptimize(orbit_of(f, s));
}
BENCHMARK(BM_OrbitOf)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Witness(benchmark::State& state) {
  const auto f = Field::of_order(5);
  const Subspace a = plane_representative(f, PlaneLabel::Sigma8).subspace;
  const Subspace b = plane_representative(f, PlaneLabel::Sigma9).subspace;
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(f, a, b));
}
BENCHMARK(BM_Witness)->Unit(benchmark::kMillisecond);

void BM_AuditPlanesQ3(benchmark::State& state) {
  const auto f = Field::of_order(3);
  for (auto _ : state) benchmark::DoNotOptimize(audit_planes(f));
}
BENCHMARK(BM_AuditPlanesQ3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
