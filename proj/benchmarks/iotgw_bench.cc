// Copyright 2026 The iotgw Authors
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

#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "iotgw/fabric/flow.h"
#include "iotgw/model/codec.h"
#include "iotgw/model/envelope.h"
#include "iotgw/sim/experiments.h"
#include "iotgw/sim/scenario.h"

namespace iotgw {
namespace {

Envelope SampleEnvelope(int records) {
  Records body;
  for (int i = 0; i < records; ++i) {
    body.records.push_back({"sensor-a", "temperature", "Cel", 38.0 + i, i});
  }
  Envelope env(ProtocolKind::kCoapLike, "fire-app", "sensor-a", body);
  env.SetHeader("coap.content_format", "0");
  env.StampChainId("A");
  return env;
}

void BM_EncodeEnvelope(benchmark::State& state) {
  const Envelope env = SampleEnvelope(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(EncodeEnvelope(env));
}
BENCHMARK(BM_EncodeEnvelope)->Arg(1)->Arg(16)->Arg(256);

void BM_DecodeEnvelope(benchmark::State& state) {
  const std::string text = EncodeEnvelope(SampleEnvelope(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(DecodeEnvelope(text));
}
BENCHMARK(BM_DecodeEnvelope)->Arg(1)->Arg(16)->Arg(256);

// Worst case: the matching entry is last in the table.
void BM_MatchPacket(benchmark::State& state) {
  fabric::FlowTable table;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    fabric::FlowEntry entry;
    entry.priority = 100;
    entry.match.chain_id = i + 1 == n ? "A" : "X" + std::to_string(i);
    entry.actions = {fabric::ForwardTo{fabric::SwitchRef{"SW2"}}};
    entry.cookie = "chain:" + std::to_string(i);
    table.Insert(entry);
  }
  const Envelope env = SampleEnvelope(1);
  for (auto _ : state) benchmark::DoNotOptimize(fabric::MatchPacket(table, env));
}
BENCHMARK(BM_MatchPacket)->Arg(4)->Arg(64)->Arg(1024);

void BM_RunScenario(benchmark::State& state) {
  const sim::ScenarioConfig cfg =
      sim::LoadScenario(std::string(IOTGW_SCENARIO_DIR) + "/disaster.scn");
  for (auto _ : state) benchmark::DoNotOptimize(sim::RunScenario(cfg));
}
BENCHMARK(BM_RunScenario)->Unit(benchmark::kMillisecond);

void BM_RunScaleTopology(benchmark::State& state) {
  const sim::ScenarioConfig cfg = sim::GenScaleTopology(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sim::RunScenario(cfg));
}
BENCHMARK(BM_RunScaleTopology)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace iotgw

BENCHMARK_MAIN();
