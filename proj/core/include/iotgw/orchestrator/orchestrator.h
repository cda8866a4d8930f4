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

#ifndef IOTGW_ORCHESTRATOR_ORCHESTRATOR_H_
#define IOTGW_ORCHESTRATOR_ORCHESTRATOR_H_

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iotgw/control/controller.h"
#include "iotgw/fabric/fabric.h"
#include "iotgw/model/scheduler.h"
#include "iotgw/model/types.h"
#include "iotgw/orchestrator/placement.h"
#include "iotgw/orchestrator/plan.h"
#include "iotgw/overlay/overlay.h"
#include "iotgw/vnf/manager.h"
#include "iotgw/vnf/store.h"

namespace iotgw::orchestrator {

// Where things sit in the provider domain, as the infrastructure manager
// knows it.
struct Infrastructure {
  std::vector<DeviceDescriptor> devices;
  // Capable host -> switch its VNFs attach to.
  std::map<std::string, std::string> host_switch;
  // Switch -> network node that runs it (joins the gateway overlay).
  std::map<std::string, std::string> switch_host;
  // Masters the gateway overlay.
  std::string fixed_node;
};

// Collaborators the orchestrator drives. None are owned.
struct Domain {
  vnf::VnfManager& manager;
  vnf::GatewayFunctionsStore& store;
  fabric::FlowFabric& fabric;
  control::SdnController& controller;
  overlay::Manet& manet;
  overlay::OverlayNetwork& overlay;
  Scheduler& scheduler;
};

// NFVO with its VNF manager and infrastructure manager: runs three-phase
// plans one at a time in arrival order behind the plan resource API.
class Orchestrator {
 public:
  using Listener = std::function<void(const OrchestrationPlan&)>;

  Orchestrator(Domain domain, Infrastructure infra, Costs costs,
               std::unique_ptr<PlacementStrategy> placement);

  // Returns the plan URI; execution is scheduled, not performed. Throws
  // kInvalidPlanRequest, kServiceUnavailable.
  std::string CreatePlan(const PlanRequest& request);
  // Throws kPlanNotFound.
  const OrchestrationPlan& GetPlan(int id) const;
  std::vector<OrchestrationPlan> AllPlans() const;
  // Replaces the request of a pending plan. Throws kPlanNotFound,
  // kPlanAlreadyRunning, kInvalidPlanRequest.
  void UpdatePlan(int id, const PlanRequest& request);
  // Removes the plan and undoes what it built. Throws kPlanNotFound,
  // kPlanAlreadyRunning.
  void DeletePlan(int id);

  ResourceView DiscoverDevices() const;

  // Called when a plan reaches Done or Failed.
  void Subscribe(Listener listener) { listeners_.push_back(std::move(listener)); }
  // Simulates the orchestrator being unreachable.
  void set_available(bool available) { available_ = available; }
  bool available() const { return available_; }
  bool Idle() const { return !running_ && queue_.empty(); }

  const Infrastructure& infrastructure() const { return infra_; }
  const Costs& costs() const { return costs_; }

  static int IdFromUri(std::string_view uri);

 private:
  void MaybeStartNext();
  void BeginPhase(int id, PhaseKind kind);
  void EndPhase(int id, PhaseKind kind);
  void Fail(OrchestrationPlan& plan, PhaseKind kind, const Error& error);
  void Finish(OrchestrationPlan& plan);
  void Rollback(OrchestrationPlan& plan);

  // Each returns the simulated duration of the phase.
  Ticks RunDeploy(OrchestrationPlan& plan);
  Ticks RunChain(OrchestrationPlan& plan);
  Ticks RunOverlay(OrchestrationPlan& plan);

  Domain domain_;
  Infrastructure infra_;
  Costs costs_;
  std::unique_ptr<PlacementStrategy> placement_;
  std::map<int, OrchestrationPlan> plans_;
  std::deque<int> queue_;
  std::optional<int> running_;
  int next_id_ = 1;
  bool available_ = true;
  std::vector<Listener> listeners_;
};

}  // namespace iotgw::orchestrator

#endif  // IOTGW_ORCHESTRATOR_ORCHESTRATOR_H_
