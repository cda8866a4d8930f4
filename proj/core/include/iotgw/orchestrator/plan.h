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

#ifndef IOTGW_ORCHESTRATOR_PLAN_H_
#define IOTGW_ORCHESTRATOR_PLAN_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iotgw/fabric/flow.h"
#include "iotgw/model/error.h"
#include "iotgw/model/types.h"
#include "iotgw/vnf/instance.h"

namespace iotgw::orchestrator {

enum class PhaseKind { kDeploy, kChain, kOverlayCreate };
enum class PlanStatus { kPending, kRunning, kDone, kFailed };

std::string_view Name(PhaseKind kind);
std::string_view Name(PlanStatus status);

// What the VNF agent asks the orchestrator to build.
struct PlanRequest {
  ChainSpec chain;
  fabric::MatchPredicate classification;
  std::string ingress;
  fabric::Target egress;
  // Per-function configuration; functions without one get the default.
  std::map<VnfKind, vnf::VnfConfig> configs;
  // IoT devices that must join the gateway overlay.
  std::vector<std::string> devices;
  // Instances per chain function. Above one, a load balancer fronts each
  // group.
  int replicas = 1;

  friend bool operator==(const PlanRequest&, const PlanRequest&) = default;
};

// Every reason the request cannot become a plan; empty means valid.
std::vector<std::string> ValidatePlanRequest(const PlanRequest& request);

struct Phase {
  PhaseKind kind = PhaseKind::kDeploy;
  PlanStatus status = PlanStatus::kPending;
  std::optional<Ticks> start;
  std::optional<Ticks> end;

  Ticks Duration() const { return start && end ? *end - *start : 0; }
};

struct OrchestrationPlan {
  int id = 0;
  std::string uri;
  PlanRequest request;
  // Chain functions plus any load balancers the replicas call for.
  std::vector<VnfKind> required;
  std::array<Phase, 3> phases{
      Phase{PhaseKind::kDeploy, PlanStatus::kPending, {}, {}},
      Phase{PhaseKind::kChain, PlanStatus::kPending, {}, {}},
      Phase{PhaseKind::kOverlayCreate, PlanStatus::kPending, {}, {}}};
  PlanStatus status = PlanStatus::kPending;
  Ticks created_at = 0;

  // Filled in while running.
  std::vector<std::string> instantiated;  // created by this plan
  std::vector<std::string> used;          // every instance the chain relies on
  std::map<VnfKind, std::string> bindings;
  std::vector<std::string> path;          // switches, ingress to egress
  std::vector<std::string> overlay_joined;
  std::string registration_key;
  std::optional<ErrorCode> error_code;
  std::string error;

  const Phase& phase(PhaseKind kind) const { return phases[static_cast<int>(kind)]; }
  Phase& phase(PhaseKind kind) { return phases[static_cast<int>(kind)]; }
  // Sum of the three phase durations.
  Ticks OrchestrationTime() const;
  std::size_t InstantiationCount() const { return instantiated.size(); }
};

// JSON forms used by the plan API.
std::string PlanToJson(const OrchestrationPlan& plan);
std::string PlansToJson(const std::vector<OrchestrationPlan>& plans);
// Throws kInvalidPlanRequest on malformed or incomplete JSON.
PlanRequest PlanRequestFromJson(std::string_view json);
std::string PlanRequestToJson(const PlanRequest& request);

}  // namespace iotgw::orchestrator

#endif  // IOTGW_ORCHESTRATOR_PLAN_H_
