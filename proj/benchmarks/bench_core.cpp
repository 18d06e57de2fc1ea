#include <benchmark/benchmark.h>

#include "makai/constants.hpp"
#include "makai/harness.hpp"
#include "makai/measure.hpp"
#include "makai/normal_coords.hpp"
#include "makai/quotient1d.hpp"
#include "makai/spectral.hpp"

using namespace makai;

namespace {

Polytope bench_polygon() { return random_convex_polytope(24, 11); }

void BM_FacetPartition(benchmark::State& state) {
  Polytope P = bench_polygon();
  for (auto _ : state) {
    auto cells = facet_partition(P);
    benchmark::DoNotOptimize(cells);
  }
}
BENCHMARK(BM_FacetPartition);

void BM_DistanceMoment(benchmark::State& state) {
  Polytope P = bench_polygon();
  for (auto _ : state) {
    auto m = distance_moment(P, 2.0);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_DistanceMoment);

void BM_SimplexKernelInteger(benchmark::State& state) {
  Simplex t;
  t.dim = 2;
  t.v[0] = Vec3(0, 0, 0);
  t.v[1] = Vec3(1, 0.2, 0);
  t.v[2] = Vec3(0.3, 0.9, 0);
  const double vals[3] = {0.3, 0.8, 1.7};
  for (auto _ : state)
    benchmark::DoNotOptimize(simplex_linear_power(t, vals, 4.0));
}
BENCHMARK(BM_SimplexKernelInteger);

void BM_SimplexKernelReal(benchmark::State& state) {
  Simplex t;
  t.dim = 2;
  t.v[0] = Vec3(0, 0, 0);
  t.v[1] = Vec3(1, 0.2, 0);
  t.v[2] = Vec3(0.3, 0.9, 0);
  const double vals[3] = {0.3, 0.8, 1.7};
  for (auto _ : state)
    benchmark::DoNotOptimize(simplex_linear_power(t, vals, 3.7));
}
BENCHMARK(BM_SimplexKernelReal);

void BM_PiPqNumeric(benchmark::State& state) {
  ExponentPair e(3, 2);
  Descent1DOptions opts;
  opts.restarts = 1;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(pi_pq_numeric(e, n, opts).value);
}
BENCHMARK(BM_PiPqNumeric)->Arg(125)->Arg(250)->Arg(500);

void BM_MeshSquare(benchmark::State& state) {
  const std::vector<Vec2> sq = {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1),
                                Vec2(0, 1)};
  const double h = 1.0 / state.range(0);
  for (auto _ : state) {
    auto m = mesh_polygon(sq, h);
    benchmark::DoNotOptimize(m);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MeshSquare)->Arg(10)->Arg(20)->Arg(40)->Complexity();

void BM_Lambda22Square(benchmark::State& state) {
  const std::vector<Vec2> sq = {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1),
                                Vec2(0, 1)};
  TriangleMesh mesh = mesh_polygon(sq, 1.0 / state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        minimize_lambda(mesh, ExponentPair(2, 2)).lambda_upper);
}
BENCHMARK(BM_Lambda22Square)->Arg(20)->Arg(40);

void BM_TorsionSquare(benchmark::State& state) {
  const std::vector<Vec2> sq = {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1),
                                Vec2(0, 1)};
  TriangleMesh mesh = mesh_polygon(sq, 1.0 / state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        minimize_lambda(mesh, ExponentPair(2, 1)).lambda_upper);
}
BENCHMARK(BM_TorsionSquare)->Arg(20)->Arg(40);

void BM_CutDistance(benchmark::State& state) {
  auto e = SmoothBody2D::ellipse(2.0, 1.0);
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.cut_distance(s, 1e-8));
    s += 0.1;
  }
}
BENCHMARK(BM_CutDistance);

} // namespace

BENCHMARK_MAIN();
