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

#ifndef IOTGW_AGENTS_AGENTS_H_
#define IOTGW_AGENTS_AGENTS_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "iotgw/model/envelope.h"
#include "iotgw/model/scheduler.h"
#include "iotgw/model/types.h"
#include "iotgw/orchestrator/orchestrator.h"
#include "iotgw/vnf/feasibility.h"

namespace iotgw::agents {

// Stable chain labels per (application requirements, device properties)
// pair. Seeded so the two reference pairs get A and B.
class ChainIdRegistry {
 public:
  static ChainIdRegistry Seeded();

  // Existing label, or the next free one (C, D, ..., Z, AA, AB, ...).
  std::string IdFor(const AppRequirements& app, const DeviceProps& dev);
  std::optional<std::string> Find(const AppRequirements& app, const DeviceProps& dev) const;
  std::size_t size() const { return ids_.size(); }

  // 0 -> A, 25 -> Z, 26 -> AA.
  static std::string Label(std::size_t index);

 private:
  std::map<std::pair<AppRequirements, DeviceProps>, std::string> ids_;
};

// DA iff the application wants aggregation, an IMC iff the models differ, a
// PC iff the protocols differ, in the order DA, IMC, PC. Conversions run
// device-to-application when every needed pair is declared that way, else
// application-to-device (actuation). Throws kInfeasibleConversion.
ChainSpec Decompose(const AppRequirements& app, const DeviceProps& dev,
                    const vnf::FeasibilityTable& table, ChainIdRegistry& registry);

struct ServiceRequest {
  std::string app_id;
  std::string app_node;
  AppRequirements requirements;
  // Devices the application wants served, first one is the flow's egress.
  std::vector<std::string> devices;
  double threshold = 0.0;  // ThresholdData
  int window = 1;          // AverageData
  // Replaces the default DA, IMC, PC order; must permute the decomposition.
  std::vector<VnfKind> order;
  int replicas = 1;
};

struct GatewayRequest {
  ServiceRequest service;
  DeviceProps props;
};

struct Notification {
  enum class Kind { kServiceAvailable, kServiceUnavailable };
  Kind kind = Kind::kServiceUnavailable;
  std::string classifier;  // set when available
  std::string plan_uri;
  std::string chain_id;
  Ticks retry_after = 0;   // set when unavailable
  std::string reason;

  bool available() const { return kind == Kind::kServiceAvailable; }
};

using Reply = std::function<void(const Notification&)>;

// Carries signaling between agents: each message is an envelope that takes
// one hop delay and is logged on send and receipt.
class SignalingBus {
 public:
  using Log = std::function<void(const std::string& source, const std::string& event)>;

  SignalingBus(Scheduler& scheduler, Ticks delay, Log log)
      : scheduler_(scheduler), delay_(delay), log_(std::move(log)) {}

  void Send(const std::string& from, const std::string& to, const std::string& what,
            std::function<void()> deliver);
  void Note(const std::string& source, const std::string& event) const { log_(source, event); }

  Scheduler& scheduler() { return scheduler_; }
  std::size_t messages() const { return messages_; }
  const std::vector<Envelope>& sent() const { return sent_; }

 private:
  Scheduler& scheduler_;
  Ticks delay_;
  Log log_;
  std::size_t messages_ = 0;
  std::vector<Envelope> sent_;
};

// Turns gateway requests into orchestration plans and reports the outcome.
class VnfAgent {
 public:
  static constexpr const char* kId = "vnf-agent";

  VnfAgent(SignalingBus& bus, orchestrator::Orchestrator& orchestrator,
           const vnf::FeasibilityTable& table, std::string classifier);

  void RequestGateway(const GatewayRequest& request, Reply reply);

  ChainSpec DecomposeRequest(const AppRequirements& app, const DeviceProps& dev) {
    return Decompose(app, dev, table_, registry_);
  }
  // Submits the plan; returns its URI.
  std::string Execute(const orchestrator::PlanRequest& plan);
  orchestrator::PlanRequest BuildPlan(const GatewayRequest& request);

  const ChainIdRegistry& registry() const { return registry_; }
  // Plans created so far (coalesced requests do not add one).
  std::size_t plans_created() const { return plans_created_; }

 private:
  struct Waiter {
    std::string plan_uri;
    std::string chain_id;
    std::vector<Reply> replies;
  };

  void OnPlanFinished(const orchestrator::OrchestrationPlan& plan);
  void Unavailable(const std::string& reason, const Reply& reply);

  SignalingBus& bus_;
  orchestrator::Orchestrator& orchestrator_;
  const vnf::FeasibilityTable& table_;
  std::string classifier_;
  ChainIdRegistry registry_ = ChainIdRegistry::Seeded();
  // In-flight plans keyed by their request, for coalescing duplicates.
  std::map<std::string, Waiter> inflight_;
  std::size_t plans_created_ = 0;
};

// Holds the device repository and forwards gateway requests.
class IotProviderAgent {
 public:
  static constexpr const char* kId = "provider-agent";

  IotProviderAgent(SignalingBus& bus, VnfAgent& vnf_agent,
                   std::vector<DeviceDescriptor> repository, Ticks retry_after);

  void RequestService(const ServiceRequest& request, Reply reply);
  // Throws kNoMatchingDevices.
  GatewayRequest BuildGatewayRequest(const ServiceRequest& request) const;

 private:
  SignalingBus& bus_;
  VnfAgent& vnf_agent_;
  std::vector<DeviceDescriptor> repository_;
  Ticks retry_after_;
};

// One application's signaling endpoint.
class ApplicationAgent {
 public:
  ApplicationAgent(SignalingBus& bus, IotProviderAgent& provider, ServiceRequest request,
                   int retries = 0);

  // Sends the service request now.
  void Start();
  // Called with each available notification; the harness starts the data
  // flow from here.
  void OnAvailable(std::function<void(const Notification&)> fn) {
    on_available_ = std::move(fn);
  }
  // Initial envelope toward the classifier: requirements and device
  // properties as headers.
  Envelope ContactClassifier(const Notification& n, const DeviceProps& props,
                             ProtocolKind protocol, Body body) const;

  const ServiceRequest& request() const { return request_; }
  std::optional<Notification> notification() const { return notification_; }
  std::optional<Ticks> requested_at() const { return requested_at_; }
  std::optional<Ticks> notified_at() const { return notified_at_; }
  bool started() const { return requested_at_.has_value(); }

 private:
  void Receive(const Notification& n);

  SignalingBus& bus_;
  IotProviderAgent& provider_;
  ServiceRequest request_;
  int retries_left_;
  std::function<void(const Notification&)> on_available_;
  std::optional<Notification> notification_;
  std::optional<Ticks> requested_at_;
  std::optional<Ticks> notified_at_;
};

}  // namespace iotgw::agents

#endif  // IOTGW_AGENTS_AGENTS_H_
