// Copyright 2026 The Quantal Authors
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

// Serial versus OpenMP kernels, plus the solver loops built on them.
//
//   ./quantal_bench --benchmark_filter=MatVec
//   OMP_NUM_THREADS=8 ./quantal_bench

#include <vector>

#include "benchmark/benchmark.h"
#include "quantal/game_zoo.h"
#include "quantal/kernels.h"
#include "quantal/random.h"
#include "quantal/regret_solvers.h"
#include "quantal/responses.h"

namespace {

using quantal::Rng;

struct Data {
  explicit Data(int n) : m(static_cast<std::size_t>(n) * n), v(n), out(n) {
    Rng rng(1);
    for (double& x : m) x = quantal::UnitDraw(rng);
    for (double& x : v) x = quantal::UnitDraw(rng);
  }
  std::vector<double> m, v, out;
};

void BM_MatVecSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Data d(n);
  for (auto _ : state) {
    quantal::kernels::serial::MatVec(d.m, n, n, d.v, d.out);
    benchmark::DoNotOptimize(d.out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_MatVecParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Data d(n);
  for (auto _ : state) {
    quantal::kernels::parallel::MatVec(d.m, n, n, d.v, d.out);
    benchmark::DoNotOptimize(d.out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_VecMatSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Data d(n);
  for (auto _ : state) {
    quantal::kernels::serial::VecMat(d.v, d.m, n, n, d.out);
    benchmark::DoNotOptimize(d.out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_VecMatParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Data d(n);
  for (auto _ : state) {
    quantal::kernels::parallel::VecMat(d.v, d.m, n, n, d.out);
    benchmark::DoNotOptimize(d.out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

BENCHMARK(BM_MatVecSerial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_MatVecParallel)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_VecMatSerial)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_VecMatParallel)->RangeMultiplier(4)->Range(64, 4096);

void BM_RmQrIterations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const quantal::NormalFormGame g = quantal::zoo::RandomNfg(n, n, 3);
  quantal::SolverOptions o;
  o.iterations = 100;
  o.check_every = 1000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        quantal::SolveQne(g, quantal::QuantalModel::Logit(1.0), o));
  }
  state.SetItemsProcessed(state.iterations() * o.iterations);
}
BENCHMARK(BM_RmQrIterations)->Arg(20)->Arg(100)->Arg(1000);

void BM_ClqrLeduc(benchmark::State& state) {
  const quantal::ExtensiveFormGame g = quantal::zoo::LeducHoldem();
  const auto leader =
      quantal::BehavioralStrategy::Uniform(g, quantal::Player::kLeader);
  const auto model = quantal::QuantalModel::Logit(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantal::Clqr(g, leader, model));
  }
}
BENCHMARK(BM_ClqrLeduc);

}  // namespace

BENCHMARK_MAIN();
