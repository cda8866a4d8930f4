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

#ifndef IOTGW_SIM_WORLD_H_
#define IOTGW_SIM_WORLD_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iotgw/agents/agents.h"
#include "iotgw/control/controller.h"
#include "iotgw/fabric/fabric.h"
#include "iotgw/orchestrator/orchestrator.h"
#include "iotgw/overlay/overlay.h"
#include "iotgw/sim/event_loop.h"
#include "iotgw/sim/report.h"
#include "iotgw/sim/scenario.h"
#include "iotgw/vnf/feasibility.h"
#include "iotgw/vnf/manager.h"
#include "iotgw/vnf/runtime.h"
#include "iotgw/vnf/store.h"

namespace iotgw::sim {

vnf::FeasibilityTable BuildFeasibility(const ScenarioConfig& cfg);
vnf::GatewayFunctionsStore BuildStore(const ScenarioConfig& cfg,
                                      const vnf::FeasibilityTable& table);

// Every module of one scenario run, wired together, plus the data plane
// that moves application flows across the fabric and the overlays.
class World {
 public:
  explicit World(ScenarioConfig cfg);
  ~World();
  World(const World&) = delete;
  World& operator=(const World&) = delete;

  // Creates the application overlay and schedules every untriggered app at
  // its start tick.
  void Start();
  // Creates the application overlay only; apps are started with StartApp.
  void SetUpOverlays();
  void StartApp(const std::string& app_id);
  void RunUntilIdle() { loop_.RunUntilIdle(); }

  MetricsReport Report() const;

  const ScenarioConfig& config() const { return cfg_; }
  EventLoop& loop() { return loop_; }
  const EventLog& log() const { return log_; }
  fabric::FlowFabric& fabric() { return fabric_; }
  vnf::VnfManager& manager() { return manager_; }
  vnf::GatewayFunctionsStore& store() { return store_; }
  const vnf::FeasibilityTable& feasibility() const { return table_; }
  vnf::VnfRuntime& runtime() { return runtime_; }
  control::SdnController& controller() { return controller_; }
  overlay::Manet& manet() { return manet_; }
  overlay::OverlayNetwork& overlay() { return overlay_; }
  orchestrator::Orchestrator& orchestrator() { return *orchestrator_; }
  agents::VnfAgent& vnf_agent() { return *vnf_agent_; }
  agents::ApplicationAgent& app(const std::string& id);
  const std::map<std::string, AppOutcome>& outcomes() const { return outcomes_; }

  // Appends to the event log at the current tick.
  void Log(const std::string& source, const std::string& event);

 private:
  class Hop;

  void Guard(const std::string& source, const std::function<void()>& fn);
  void StartFlow(const std::string& app_id, const agents::Notification& n);
  std::optional<fabric::VnfHopHandler::Result> Collect(const Envelope& request, Ticks now);
  void AtSwitch(const std::string& app_id, const std::string& switch_id, Envelope env);
  void AtDevice(const std::string& app_id, const std::string& device_id, Envelope env);
  void AtApp(const std::string& app_id, Envelope env);
  // Copies new switch trace lines and overlay events into the log.
  void Sync();

  ScenarioConfig cfg_;
  EventLoop loop_;
  EventLog log_;
  vnf::FeasibilityTable table_;
  vnf::GatewayFunctionsStore store_;
  vnf::VnfManager manager_;
  fabric::FlowFabric fabric_;
  control::SdnController controller_;
  overlay::Manet manet_;
  overlay::OverlayNetwork overlay_;
  vnf::VnfRuntime runtime_;
  std::unique_ptr<Hop> hop_;
  std::unique_ptr<orchestrator::Orchestrator> orchestrator_;
  std::unique_ptr<agents::SignalingBus> bus_;
  std::unique_ptr<agents::VnfAgent> vnf_agent_;
  std::unique_ptr<agents::IotProviderAgent> provider_;
  std::map<std::string, std::unique_ptr<agents::ApplicationAgent>> apps_;
  std::map<std::string, AppOutcome> outcomes_;
  std::map<std::string, Ticks> flow_started_;
  std::size_t trace_synced_ = 0;
  std::size_t overlay_synced_ = 0;
  std::size_t data_hops_ = 0;
  std::size_t overlay_messages_ = 0;
  std::vector<std::string> errors_;
};

}  // namespace iotgw::sim

#endif  // IOTGW_SIM_WORLD_H_
