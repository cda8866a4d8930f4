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

#include "iotgw/sim/experiments.h"

#include <algorithm>

#include "iotgw/agents/agents.h"
#include "iotgw/model/error.h"
#include "iotgw/sim/world.h"

namespace iotgw::sim {

namespace {

RunResult Finish(const World& world) {
  RunResult result{world.Report(), world.log().ToText(), {}};
  result.csv = result.report.ToCsv();
  return result;
}

std::optional<orchestrator::OrchestrationPlan> PlanOf(const RunResult& run,
                                                      const std::string& app_id) {
  const AppOutcome* app = run.report.App(app_id);
  return app == nullptr ? std::nullopt : app->plan;
}

ScenarioConfig OnlyApps(ScenarioConfig cfg, const std::vector<std::string>& ids) {
  std::erase_if(cfg.apps, [&](const AppConfig& app) {
    return std::find(ids.begin(), ids.end(), app.id) == ids.end();
  });
  return cfg;
}

ChainSpec ChainOf(const ScenarioConfig& cfg, const AppConfig& app) {
  const DeviceConfig* dev = app.devices.empty() ? nullptr : cfg.Device(app.devices.front());
  if (dev == nullptr) throw Error(ErrorCode::kNoMatchingDevices, app.id);
  vnf::FeasibilityTable table = BuildFeasibility(cfg);
  agents::ChainIdRegistry registry = agents::ChainIdRegistry::Seeded();
  return agents::Decompose(app.requirements, dev->descriptor.props, table, registry);
}

std::optional<VnfKind> KindOf(const ChainSpec& chain, VnfType type) {
  for (const VnfKind& kind : chain.functions) {
    if (kind.type == type) return kind;
  }
  return std::nullopt;
}

}  // namespace

RunResult RunScenario(const ScenarioConfig& cfg) {
  World world(cfg);
  world.Start();
  world.RunUntilIdle();
  return Finish(world);
}

UpgradeResult RunUpgradeScenario(const ScenarioConfig& cfg) {
  const AppConfig* target = cfg.App(cfg.upgrade_target);
  if (target == nullptr) {
    throw Error(ErrorCode::kInvalidConfig, "no upgrade target app '" + cfg.upgrade_target + "'");
  }
  UpgradeResult result;
  {
    World world(OnlyApps(cfg, {target->id}));
    world.SetUpOverlays();
    world.StartApp(target->id);
    world.RunUntilIdle();
    result.fresh = Finish(world);
  }
  std::vector<std::string> earlier;
  for (const AppConfig& app : cfg.apps) {
    if (app.id == target->id) break;
    if (!app.command) earlier.push_back(app.id);
  }
  std::vector<std::string> ids = earlier;
  ids.push_back(target->id);
  {
    World world(OnlyApps(cfg, ids));
    world.SetUpOverlays();
    for (const std::string& id : earlier) world.StartApp(id);
    world.RunUntilIdle();
    world.Log("experiment", "upgrade " + target->id);
    world.StartApp(target->id);
    world.RunUntilIdle();
    result.upgrade = Finish(world);
  }
  result.fresh_plan = PlanOf(result.fresh, target->id);
  result.upgrade_plan = PlanOf(result.upgrade, target->id);
  return result;
}

OrderResult CompareChainOrders(const ScenarioConfig& cfg) {
  const AppConfig* chosen = nullptr;
  ChainSpec chain;
  for (const AppConfig& app : cfg.apps) {
    if (!cfg.order_app.empty() && app.id != cfg.order_app) continue;
    if (app.command) continue;
    chain = ChainOf(cfg, app);
    if (KindOf(chain, VnfType::kDA) && KindOf(chain, VnfType::kIMC)) {
      chosen = &app;
      break;
    }
  }
  if (chosen == nullptr) {
    throw Error(ErrorCode::kInvalidConfig, "no app with both DA and IMC in its chain");
  }
  const VnfKind da = *KindOf(chain, VnfType::kDA);
  const VnfKind imc = *KindOf(chain, VnfType::kIMC);
  std::vector<VnfKind> rest;
  for (const VnfKind& kind : chain.functions) {
    if (kind != da && kind != imc) rest.push_back(kind);
  }

  auto arm = [&](bool da_first) {
    ScenarioConfig arm_cfg = OnlyApps(cfg, {chosen->id});
    AppConfig& app = arm_cfg.apps.front();
    app.order = da_first ? std::vector<VnfKind>{da, imc} : std::vector<VnfKind>{imc, da};
    app.order.insert(app.order.end(), rest.begin(), rest.end());
    app.start = 0;
    if (!da_first) {
      auto da_pins = arm_cfg.placement.find(da.ToString());
      auto imc_pins = arm_cfg.placement.find(imc.ToString());
      if (da_pins != arm_cfg.placement.end() && imc_pins != arm_cfg.placement.end()) {
        std::swap(da_pins->second, imc_pins->second);
      }
    }
    return RunScenario(arm_cfg);
  };
  OrderResult result;
  result.app_id = chosen->id;
  result.da_first = arm(true);
  result.imc_first = arm(false);
  return result;
}

}  // namespace iotgw::sim
