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

#include "iotgw/agents/agents.h"

#include <algorithm>

#include "iotgw/model/error.h"
#include "iotgw/vnf/instance.h"

namespace iotgw::agents {

using orchestrator::PlanRequest;

ChainIdRegistry ChainIdRegistry::Seeded() {
  ChainIdRegistry registry;
  registry.IdFor({ProtocolKind::kHttpLike, InfoModelKind::kSenmlLike, Aggregation::kAverageData},
                 {ProtocolKind::kCoapLike, InfoModelKind::kRaw});
  registry.IdFor(
      {ProtocolKind::kHttpLike, InfoModelKind::kSensormlLike, Aggregation::kAverageData},
      {ProtocolKind::kHttpLike, InfoModelKind::kRaw});
  return registry;
}

std::string ChainIdRegistry::Label(std::size_t index) {
  std::string out;
  ++index;
  while (index > 0) {
    --index;
    out.insert(out.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return out;
}

std::string ChainIdRegistry::IdFor(const AppRequirements& app, const DeviceProps& dev) {
  auto [it, inserted] = ids_.try_emplace({app, dev}, "");
  if (inserted) it->second = Label(ids_.size() - 1);
  return it->second;
}

std::optional<std::string> ChainIdRegistry::Find(const AppRequirements& app,
                                                 const DeviceProps& dev) const {
  auto it = ids_.find({app, dev});
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

ChainSpec Decompose(const AppRequirements& app, const DeviceProps& dev,
                    const vnf::FeasibilityTable& table, ChainIdRegistry& registry) {
  const bool need_imc = app.info_model != dev.info_model;
  const bool need_pc = app.protocol != dev.protocol;
  auto conversions = [&](bool device_to_app) -> std::optional<std::vector<VnfKind>> {
    std::vector<VnfKind> out;
    if (need_imc) {
      auto imc = device_to_app ? table.ImcFor(dev.info_model, app.info_model)
                               : table.ImcFor(app.info_model, dev.info_model);
      if (!imc) return std::nullopt;
      out.push_back(*imc);
    }
    if (need_pc) {
      auto pc = device_to_app ? table.PcFor(dev.protocol, app.protocol)
                              : table.PcFor(app.protocol, dev.protocol);
      if (!pc) return std::nullopt;
      out.push_back(*pc);
    }
    return out;
  };
  auto converters = conversions(true);
  if (!converters) converters = conversions(false);
  if (!converters) {
    throw Error(ErrorCode::kInfeasibleConversion,
                std::string(Name(dev.info_model)) + "/" + std::string(Name(dev.protocol)) +
                    " cannot be converted to " + std::string(Name(app.info_model)) + "/" +
                    std::string(Name(app.protocol)));
  }
  ChainSpec chain;
  if (app.aggregation != Aggregation::kNone) chain.functions.push_back({VnfType::kDA, 1});
  chain.functions.insert(chain.functions.end(), converters->begin(), converters->end());
  chain.chain_id = registry.IdFor(app, dev);
  return chain;
}

void SignalingBus::Send(const std::string& from, const std::string& to,
                        const std::string& what, std::function<void()> deliver) {
  Envelope signal(ProtocolKind::kHttpLike, from, to);
  signal.SetHeader("signal", what);
  sent_.push_back(signal);
  ++messages_;
  log_(from, "send " + what + " to " + to);
  scheduler_.After(delay_, to, [this, to, what, deliver = std::move(deliver)] {
    log_(to, "recv " + what);
    deliver();
  });
}

VnfAgent::VnfAgent(SignalingBus& bus, orchestrator::Orchestrator& orchestrator,
                   const vnf::FeasibilityTable& table, std::string classifier)
    : bus_(bus), orchestrator_(orchestrator), table_(table), classifier_(std::move(classifier)) {
  orchestrator_.Subscribe(
      [this](const orchestrator::OrchestrationPlan& plan) { OnPlanFinished(plan); });
}

PlanRequest VnfAgent::BuildPlan(const GatewayRequest& request) {
  const ServiceRequest& service = request.service;
  PlanRequest plan;
  plan.chain = DecomposeRequest(service.requirements, request.props);
  if (!service.order.empty()) {
    if (!std::is_permutation(service.order.begin(), service.order.end(),
                             plan.chain.functions.begin(), plan.chain.functions.end())) {
      throw Error(ErrorCode::kInvalidPlanRequest,
                  "order " + FunctionList(service.order) + " does not permute " +
                      FunctionList(plan.chain.functions));
    }
    plan.chain.functions = service.order;
  }
  plan.classification.app_requirements = service.requirements;
  plan.classification.device_props = request.props;
  plan.ingress = classifier_;
  if (service.devices.empty()) throw Error(ErrorCode::kNoMatchingDevices, service.app_id);
  plan.egress = fabric::DeviceRef{service.devices.front()};
  plan.devices = service.devices;
  plan.replicas = service.replicas;
  const VnfKind da{VnfType::kDA, 1};
  if (std::find(plan.chain.functions.begin(), plan.chain.functions.end(), da) !=
      plan.chain.functions.end()) {
    vnf::DaConfig config;
    if (service.requirements.aggregation == Aggregation::kThresholdData) {
      config = {vnf::DaMode::kThreshold, service.threshold, 1};
    } else {
      config = {vnf::DaMode::kAverage, 0.0, service.window};
    }
    plan.configs[da] = config;
  }
  return plan;
}

std::string VnfAgent::Execute(const PlanRequest& plan) {
  std::string uri = orchestrator_.CreatePlan(plan);
  ++plans_created_;
  return uri;
}

void VnfAgent::Unavailable(const std::string& reason, const Reply& reply) {
  Notification n;
  n.kind = Notification::Kind::kServiceUnavailable;
  n.retry_after = orchestrator_.costs().retry_after;
  n.reason = reason;
  bus_.Send(kId, IotProviderAgent::kId, "service-unavailable", [reply, n] { reply(n); });
}

void VnfAgent::RequestGateway(const GatewayRequest& request, Reply reply) {
  PlanRequest plan;
  try {
    plan = BuildPlan(request);
  } catch (const Error& error) {
    bus_.Note(kId, std::string("decompose failed: ") + error.what());
    Unavailable(error.what(), reply);
    return;
  }
  const std::string key = orchestrator::PlanRequestToJson(plan);
  if (auto it = inflight_.find(key); it != inflight_.end()) {
    it->second.replies.push_back(std::move(reply));
    bus_.Note(kId, "coalesced " + request.service.app_id + " into chain " +
                       plan.chain.chain_id);
    return;
  }
  bus_.Note(kId, "chain " + plan.chain.chain_id + " = " + FunctionList(plan.chain.functions));
  inflight_[key] = Waiter{"", plan.chain.chain_id, {std::move(reply)}};
  bus_.Send(kId, "orchestrator", "execute-plan", [this, key, plan] {
    try {
      inflight_.at(key).plan_uri = Execute(plan);
      bus_.Note("orchestrator", "created " + inflight_.at(key).plan_uri);
    } catch (const Error& error) {
      std::vector<Reply> replies = std::move(inflight_.at(key).replies);
      inflight_.erase(key);
      std::string reason = error.what();
      bus_.Send("orchestrator", kId, "plan-rejected", [this, replies, reason] {
        for (const Reply& r : replies) Unavailable(reason, r);
      });
    }
  });
}

void VnfAgent::OnPlanFinished(const orchestrator::OrchestrationPlan& plan) {
  auto it = std::find_if(inflight_.begin(), inflight_.end(),
                         [&](const auto& kv) { return kv.second.plan_uri == plan.uri; });
  if (it == inflight_.end()) return;
  Waiter waiter = std::move(it->second);
  inflight_.erase(it);
  Notification n;
  n.plan_uri = plan.uri;
  n.chain_id = waiter.chain_id;
  if (plan.status == orchestrator::PlanStatus::kDone) {
    n.kind = Notification::Kind::kServiceAvailable;
    n.classifier = classifier_;
  } else {
    n.kind = Notification::Kind::kServiceUnavailable;
    n.retry_after = orchestrator_.costs().retry_after;
    n.reason = plan.error;
  }
  const std::string what = n.available() ? "plan-done" : "plan-failed";
  bus_.Send("orchestrator", kId, what, [this, waiter, n] {
    for (const Reply& reply : waiter.replies) {
      bus_.Send(kId, IotProviderAgent::kId,
                n.available() ? "service-available" : "service-unavailable",
                [reply, n] { reply(n); });
    }
  });
}

IotProviderAgent::IotProviderAgent(SignalingBus& bus, VnfAgent& vnf_agent,
                                   std::vector<DeviceDescriptor> repository,
                                   Ticks retry_after)
    : bus_(bus),
      vnf_agent_(vnf_agent),
      repository_(std::move(repository)),
      retry_after_(retry_after) {}

GatewayRequest IotProviderAgent::BuildGatewayRequest(const ServiceRequest& request) const {
  if (request.devices.empty() || repository_.empty()) {
    throw Error(ErrorCode::kNoMatchingDevices, "no devices for " + request.app_id);
  }
  std::optional<DeviceProps> props;
  for (const std::string& id : request.devices) {
    auto it = std::find_if(repository_.begin(), repository_.end(),
                           [&](const DeviceDescriptor& d) { return d.id == id; });
    if (it == repository_.end()) {
      throw Error(ErrorCode::kNoMatchingDevices, id + " is not in the device repository");
    }
    if (!props) props = it->props;
  }
  return GatewayRequest{request, *props};
}

void IotProviderAgent::RequestService(const ServiceRequest& request, Reply reply) {
  const std::string app = request.app_id;
  Reply to_app = [this, app, reply](const Notification& n) {
    bus_.Send(kId, app, n.available() ? "service-available" : "service-unavailable",
              [reply, n] { reply(n); });
  };
  GatewayRequest gateway;
  try {
    gateway = BuildGatewayRequest(request);
  } catch (const Error& error) {
    bus_.Note(kId, error.what());
    Notification n;
    n.kind = Notification::Kind::kServiceUnavailable;
    n.retry_after = retry_after_;
    n.reason = error.what();
    to_app(n);
    return;
  }
  bus_.Send(kId, VnfAgent::kId, "request-gateway",
            [this, gateway, to_app] { vnf_agent_.RequestGateway(gateway, to_app); });
}

ApplicationAgent::ApplicationAgent(SignalingBus& bus, IotProviderAgent& provider,
                                   ServiceRequest request, int retries)
    : bus_(bus), provider_(provider), request_(std::move(request)), retries_left_(retries) {}

void ApplicationAgent::Start() {
  requested_at_ = bus_.scheduler().now();
  notification_.reset();
  notified_at_.reset();
  bus_.Send(request_.app_id, IotProviderAgent::kId, "request-service", [this] {
    provider_.RequestService(request_, [this](const Notification& n) { Receive(n); });
  });
}

void ApplicationAgent::Receive(const Notification& n) {
  notification_ = n;
  notified_at_ = bus_.scheduler().now();
  if (n.available()) {
    bus_.Note(request_.app_id, "service available via " + n.classifier + " chain " +
                                   n.chain_id);
    if (on_available_) on_available_(n);
    return;
  }
  bus_.Note(request_.app_id, "service unavailable: " + n.reason);
  if (retries_left_ > 0) {
    --retries_left_;
    bus_.scheduler().After(n.retry_after, request_.app_id, [this] { Start(); });
  }
}

Envelope ApplicationAgent::ContactClassifier(const Notification& n, const DeviceProps& props,
                                             ProtocolKind protocol, Body body) const {
  if (!n.available()) {
    throw Error(ErrorCode::kServiceUnavailable, request_.app_id + " has no gateway");
  }
  Envelope env(protocol, request_.app_id, request_.devices.front(), std::move(body));
  env.SetAppRequirements(request_.requirements);
  env.SetDeviceProps(props);
  return env;
}

}  // namespace iotgw::agents
