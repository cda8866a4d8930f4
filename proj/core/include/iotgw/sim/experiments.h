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

#ifndef IOTGW_SIM_EXPERIMENTS_H_
#define IOTGW_SIM_EXPERIMENTS_H_

#include <optional>
#include <string>

#include "iotgw/orchestrator/plan.h"
#include "iotgw/sim/report.h"
#include "iotgw/sim/scenario.h"

namespace iotgw::sim {

struct RunResult {
  MetricsReport report;
  std::string events;  // events.log text
  std::string csv;     // metrics.csv text
};

// Runs every app of `cfg` to completion.
RunResult RunScenario(const ScenarioConfig& cfg);

struct UpgradeResult {
  RunResult fresh;
  RunResult upgrade;
  // Plan of the target app in each arm.
  std::optional<orchestrator::OrchestrationPlan> fresh_plan;
  std::optional<orchestrator::OrchestrationPlan> upgrade_plan;
};

// Fresh arm: only cfg.upgrade_target runs. Upgrade arm: the other sensing
// apps run first so their functions are live when the target's plan is
// deployed. Throws kInvalidConfig without a target.
UpgradeResult RunUpgradeScenario(const ScenarioConfig& cfg);

struct OrderResult {
  std::string app_id;
  RunResult da_first;
  RunResult imc_first;
};

// Runs cfg.order_app (or the first app whose chain has DA and IMC) alone
// with the DA before the IMC and then the other way round. The IMC-first
// arm swaps the DA and IMC placement pins so both arms use the same path.
OrderResult CompareChainOrders(const ScenarioConfig& cfg);

}  // namespace iotgw::sim

#endif  // IOTGW_SIM_EXPERIMENTS_H_
