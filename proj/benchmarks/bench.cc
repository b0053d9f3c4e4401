// Copyright 2026 The qkdkr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "qkdkr/channels.h"
#include "qkdkr/keyrate.h"
#include "qkdkr/numerics.h"
#include "qkdkr/oracle.h"
#include "qkdkr/tracedist.h"

namespace qkdkr {
namespace {

void BM_HermitianEigenvalues(benchmark::State& state) {
  const HermitianMatrix m = RandomHermitian(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(HermitianEigenvalues(m));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(4)->Arg(16)->Arg(64);

void BM_EpsilonGeneral(benchmark::State& state) {
  const ChannelModel ch = AmplitudeDampingChannel(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(EpsilonGeneral(ch));
}
BENCHMARK(BM_EpsilonGeneral)->Arg(4)->Arg(12)->Arg(32);

void BM_NoiseToleranceDepolarizing(benchmark::State& state) {
  ProtocolConfig cfg;
  cfg.dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(NoiseTolerance(cfg));
}
BENCHMARK(BM_NoiseToleranceDepolarizing)->Arg(2)->Arg(110);

void BM_NoiseToleranceAmpDamping(benchmark::State& state) {
  ProtocolConfig cfg;
  cfg.dim = 4;
  cfg.family = ChannelFamily::kAmplitudeDamping;
  for (auto _ : state) benchmark::DoNotOptimize(NoiseTolerance(cfg));
}
BENCHMARK(BM_NoiseToleranceAmpDamping)->Unit(benchmark::kMillisecond);

void BM_ExactDelta(benchmark::State& state) {
  const AttackInstance att =
      BuildAttack(DepolarizingChannel(static_cast<int>(state.range(0)), 0.05), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ExactDelta(att));
}
BENCHMARK(BM_ExactDelta)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qkdkr

BENCHMARK_MAIN();
