// Copyright 2026 The IFDP Authors.
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

#include "ifdp/cga.h"
#include "ifdp/lp.h"
#include "ifdp/mfa.h"
#include "ifdp/oracle.h"
#include "ifdp/scenario.h"
#include "ifdp/tsa.h"

namespace {

ifdp::Instance SmallInstance(int flows, std::uint64_t seed) {
  ifdp::Scenario sc;
  sc.topology = ifdp::Topology::kSmall;
  sc.flow_count = flows;
  sc.deadline_mode = ifdp::DeadlineMode::kFixed;
  sc.alpha = 2.0 * flows;
  sc.seed = seed;
  return ifdp::GenerateInstance(sc);
}

void BM_CgaFig1(benchmark::State& state) {
  const ifdp::Instance inst = ifdp::Fig1Instance();
  for (auto _ : state) benchmark::DoNotOptimize(ifdp::SolveCga(inst));
}
BENCHMARK(BM_CgaFig1);

void BM_Tsa2xFig1(benchmark::State& state) {
  const ifdp::Instance inst = ifdp::Fig1Instance();
  for (auto _ : state) benchmark::DoNotOptimize(ifdp::SolveTsa(inst, 2));
}
BENCHMARK(BM_Tsa2xFig1);

void BM_RtsaFig1(benchmark::State& state) {
  const ifdp::Instance inst = ifdp::Fig1Instance();
  for (auto _ : state) benchmark::DoNotOptimize(ifdp::RtsaLowerBound(inst));
}
BENCHMARK(BM_RtsaFig1);

void BM_OracleTiny(benchmark::State& state) {
  const ifdp::Instance inst = ifdp::GenerateTinyInstance(7);
  for (auto _ : state) benchmark::DoNotOptimize(ifdp::SolveFullMp(inst));
}
BENCHMARK(BM_OracleTiny);

void BM_CgaSmall(benchmark::State& state) {
  const ifdp::Instance inst = SmallInstance(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ifdp::SolveCga(inst));
}
BENCHMARK(BM_CgaSmall)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_MfaSmall(benchmark::State& state) {
  const ifdp::Instance inst = SmallInstance(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ifdp::SolveMfa(inst));
}
BENCHMARK(BM_MfaSmall)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DenseLp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ifdp::LpProblem lp;
  for (int j = 0; j < n; ++j) lp.AddVariable(-1.0 - (j % 7), 0.0, 10.0);
  for (int i = 0; i < n; ++i) {
    std::vector<ifdp::LpTerm> row;
    for (int j = 0; j < n; ++j) row.push_back({j, 1.0 + ((i * 31 + j * 17) % 5)});
    lp.AddRow(std::move(row), ifdp::Relation::kLessEqual, 100.0 + i);
  }
  for (auto _ : state) benchmark::DoNotOptimize(ifdp::SolveLp(lp));
}
BENCHMARK(BM_DenseLp)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
