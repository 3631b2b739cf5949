// Serial reference sweeps against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "bbinterp/tensor_product.hpp"

using namespace bbinterp;

namespace {

Nodes1D interior(int n) {
  std::vector<double> x;
  for (int i = 0; i <= n; ++i) x.push_back(double(i + 1) / double(n + 2));
  return Nodes1D(x);
}

std::vector<double> noise(std::size_t count) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(count);
  for (auto& x : v) x = u(rng);
  return v;
}

TensorGrid2D grid2(int n) {
  const auto m = static_cast<std::size_t>(n + 1);
  return {interior(n), interior(n), noise(m * m)};
}

TensorGrid3D grid3(int n) {
  const auto m = static_cast<std::size_t>(n + 1);
  return {interior(n), interior(n), interior(n), noise(m * m * m)};
}

void BM_Serial2D(benchmark::State& state) {
  const auto g = grid2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::tensor_product_2d(g));
}

void BM_Parallel2D(benchmark::State& state) {
  const auto g = grid2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_product_2d(g));
}

void BM_Serial3D(benchmark::State& state) {
  const auto g = grid3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::tensor_product_3d(g));
}

void BM_Parallel3D(benchmark::State& state) {
  const auto g = grid3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_product_3d(g));
}

}  // namespace

BENCHMARK(BM_Serial2D)->Arg(64)->Arg(256)->Arg(512)->UseRealTime();
BENCHMARK(BM_Parallel2D)->Arg(64)->Arg(256)->Arg(512)->UseRealTime();
BENCHMARK(BM_Serial3D)->Arg(16)->Arg(48)->Arg(96)->UseRealTime();
BENCHMARK(BM_Parallel3D)->Arg(16)->Arg(48)->Arg(96)->UseRealTime();

BENCHMARK_MAIN();
