#include <benchmark/benchmark.h>

#include "linkforge/bonds.hpp"
#include "linkforge/construct.hpp"
#include "linkforge/numerics.hpp"

using namespace linkforge;

static void BM_DualQuaternionProduct(benchmark::State& state) {
  DQ a(Quat(0.2, -0.4, 0.8, 0.1), Quat(0.5, 0.3, -0.2, 0.9));
  DQ b(Quat(1.2, 0.4, -0.8, 0.3), Quat(-0.5, 0.1, 0.2, -0.9));
  for (auto _ : state) {
    DQ c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_DualQuaternionProduct);

static void BM_ClosureResidual(benchmark::State& state) {
  GalleryEntry e = gallery("goldberg");
  Configuration c = initial_configuration(e.linkage);
  for (auto _ : state) {
    auto r = closure_residual(e.linkage, c);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ClosureResidual);

static void BM_ClosureJacobian(benchmark::State& state) {
  GalleryEntry e = gallery("goldberg");
  Configuration c = initial_configuration(e.linkage);
  for (auto _ : state) {
    auto J = closure_jacobian(e.linkage, c);
    benchmark::DoNotOptimize(J);
  }
}
BENCHMARK(BM_ClosureJacobian);

static void BM_TrackStep(benchmark::State& state) {
  GalleryEntry e = gallery("bennett");
  TrackOptions opts;
  opts.steps = 1;
  opts.steplen = 0.05;
  for (auto _ : state) {
    CurveSample s = track_curve(e.linkage, initial_configuration(e.linkage), Eigen::VectorXd(), opts);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_TrackStep);

static void BM_BennettBonds(benchmark::State& state) {
  GalleryEntry e = gallery("bennett");
  for (auto _ : state) {
    auto bonds = find_bonds(*e.curve);
    benchmark::DoNotOptimize(bonds);
  }
}
BENCHMARK(BM_BennettBonds);

static void BM_MobilityEstimate(benchmark::State& state) {
  GalleryEntry e = gallery("goldberg");
  for (auto _ : state) {
    auto rep = mobility_estimate(e.linkage, initial_configuration(e.linkage), 1e-8, 1);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_MobilityEstimate);

BENCHMARK_MAIN();
