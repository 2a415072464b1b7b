#include <benchmark/benchmark.h>

#include "orthent/critical.hpp"
#include "orthent/entropy.hpp"
#include "orthent/manifold.hpp"
#include "orthent/matrix.hpp"

namespace {

using namespace orthent;

void BM_Entropy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd m = haar_random_orthogonal(n, 42).mat();
  for (auto _ : state) benchmark::DoNotOptimize(entropy_value(m));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Entropy)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNSquared);

void BM_EuclideanGradient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd m = haar_random_orthogonal(n, 42).mat();
  for (auto _ : state) benchmark::DoNotOptimize(euclidean_gradient(m));
}
BENCHMARK(BM_EuclideanGradient)->RangeMultiplier(2)->Range(4, 256);

void BM_Retract(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OrthogonalMatrix o = haar_random_orthogonal(n, 42);
  const TangentDirection dir =
      tangent_project(o, euclidean_gradient(o.mat()));
  for (auto _ : state) benchmark::DoNotOptimize(retract(o, dir, 0.01));
}
BENCHMARK(BM_Retract)->RangeMultiplier(2)->Range(4, 128);

void BM_HaarSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(haar_random_orthogonal(n, ++seed));
}
BENCHMARK(BM_HaarSample)->RangeMultiplier(2)->Range(4, 128);

void BM_TangentHessian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OrthogonalMatrix o = family_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(riemannian_hessian(o));
}
BENCHMARK(BM_TangentHessian)->DenseRange(3, 6);

void BM_MaximizeEntropy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  OptimizerConfig cfg;
  cfg.max_iters = 200;
  cfg.grad_tol = 1e-8;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const OrthogonalMatrix start = haar_random_orthogonal(n, ++seed);
    benchmark::DoNotOptimize(maximize_entropy(start, cfg));
  }
}
BENCHMARK(BM_MaximizeEntropy)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
