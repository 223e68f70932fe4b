// Copyright 2026 The qknn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qknn/features/feature_vector.hpp"
#include "qknn/knn/amplitude_estimation.hpp"
#include "qknn/knn/encoding.hpp"
#include "qknn/knn/search.hpp"
#include "qknn/knn/swap_test.hpp"
#include "qknn/pipeline/synthetic.hpp"

namespace {

using namespace qknn;

std::vector<double> random_unit(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  double norm = 0;
  for (auto& x : v) {
    x = u(rng);
    norm += x * x;
  }
  for (auto& x : v) x /= std::sqrt(norm);
  return v;
}

void BM_HadamardLayer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qsim::StateVector s(n);
  for (auto _ : state) {
    for (int q = 0; q < n; ++q) s.apply(qsim::Gate{qsim::gates::H{q}, {}});
    benchmark::DoNotOptimize(s[0]);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_HadamardLayer)->DenseRange(10, 20, 5);

void BM_ControlledRy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qsim::StateVector s(n);
  const qsim::Gate g{qsim::gates::Ry{0, 0.3}, {{n - 1, true}, {n - 2, false}}};
  for (auto _ : state) {
    s.apply(g);
    benchmark::DoNotOptimize(s[0]);
  }
}
BENCHMARK(BM_ControlledRy)->DenseRange(10, 20, 5);

void BM_SwapTest(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto a = random_unit(N, rng);
  const auto b = random_unit(N, rng);
  const auto sa = knn::amplitude_state(a);
  const auto sb = knn::amplitude_state(b);
  for (auto _ : state) benchmark::DoNotOptimize(knn::swap_test_distance(sa, sb));
}
BENCHMARK(BM_SwapTest)->Arg(8)->Arg(80)->Arg(200);

void BM_AmplitudeEstimation(benchmark::State& state) {
  const knn::AeConfig cfg{static_cast<int>(state.range(0))};
  const auto prep = knn::rotation_preparation(0.37);
  qsim::Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(knn::amplitude_estimate(prep, cfg, rng).estimate);
}
BENCHMARK(BM_AmplitudeEstimation)->Arg(6)->Arg(10);

void BM_DurrKMin(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::uint64_t> code(0, 255);
  knn::DistanceTable t;
  for (std::size_t j = 0; j < M; ++j) {
    t.quantized.push_back(code(gen));
    t.exact.push_back(static_cast<double>(t.quantized.back()) / 255.0);
  }
  const auto sigma = knn::sigma_from_table(t);
  qsim::Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(knn::durr_k_min(sigma, 3, 1.0, rng).grover_iterations);
}
BENCHMARK(BM_DurrKMin)->Arg(16)->Arg(128)->Arg(1024);

void BM_ExtractRaw(benchmark::State& state) {
  pipeline::SyntheticOptions opts;
  opts.width = static_cast<std::size_t>(state.range(0));
  opts.height = opts.width * 3 / 4;
  const auto image = pipeline::synthesize("Leopards", 5, opts);
  for (auto _ : state) benchmark::DoNotOptimize(features::extract_raw(image).color[0]);
}
BENCHMARK(BM_ExtractRaw)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
