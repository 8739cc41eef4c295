// Copyright 2026 The lrn-detect Authors
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


// Serial reference kernels against their OpenMP counterparts.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lrn/dense/kernels.hpp"
#include "lrn/dense/fixed_point.hpp"
#include "lrn/mps/tensor.hpp"

namespace {

namespace k = lrn::dense::kernels;

Eigen::VectorXcd random_state(int n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v.normalized();
}

lrn::mps::MpsTensor random_tensor(int d, int chi) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::vector<Eigen::MatrixXcd> m(d, Eigen::MatrixXcd(chi, chi));
  for (auto& a : m) {
    for (auto& x : a.reshaped()) x = {g(rng), g(rng)};
  }
  return lrn::mps::MpsTensor(std::move(m));
}

template <bool Parallel>
void BM_ApplyOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::VectorXcd v = random_state(n);
  const Eigen::MatrixXcd u = Eigen::MatrixXcd::Random(4, 4);
  const int slots[2] = {n / 2, n / 2 + 1};
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::parallel::apply_operator(v, n, 2, slots, u);
    } else {
      k::serial::apply_operator(v, n, 2, slots, u);
    }
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * v.size());
}

template <bool Parallel>
void BM_Materialize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = random_tensor(2, 3);
  for (auto _ : state) {
    auto out = Parallel ? k::parallel::materialize(a.matrices(), n) : k::serial::materialize(a.matrices(), n);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}

template <bool Parallel>
void BM_MaterializeSparse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = lrn::dense::ghz_tensor();
  for (auto _ : state) {
    auto out = Parallel ? k::parallel::materialize(a.matrices(), n) : k::serial::materialize(a.matrices(), n);
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool Parallel>
void BM_ReducedDensity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::VectorXcd v = random_state(n);
  std::vector<int> region;
  for (int q = 0; q < n / 2; ++q) region.push_back(2 * q);
  for (auto _ : state) {
    auto rho = Parallel ? k::parallel::reduced_density(v, n, 2, region) : k::serial::reduced_density(v, n, 2, region);
    benchmark::DoNotOptimize(rho.data());
  }
}

}  // namespace

BENCHMARK(BM_ApplyOperator<false>)->Arg(16)->Arg(20);
BENCHMARK(BM_ApplyOperator<true>)->Arg(16)->Arg(20);
BENCHMARK(BM_Materialize<false>)->Arg(12)->Arg(16);
BENCHMARK(BM_Materialize<true>)->Arg(12)->Arg(16);
BENCHMARK(BM_MaterializeSparse<false>)->Arg(16)->Arg(20);
BENCHMARK(BM_MaterializeSparse<true>)->Arg(16)->Arg(20);
BENCHMARK(BM_ReducedDensity<false>)->Arg(12)->Arg(16);
BENCHMARK(BM_ReducedDensity<true>)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
