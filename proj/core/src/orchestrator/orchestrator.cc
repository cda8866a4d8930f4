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

#include "iotgw/orchestrator/orchestrator.h"

#include <algorithm>
#include <charconv>

#include "iotgw/model/error.h"

namespace iotgw::orchestrator {

namespace {

constexpr VnfKind kLoadBalancer{VnfType::kLB, 1};

vnf::VnfConfig ConfigFor(const PlanRequest& request, const VnfKind& kind) {
  auto it = request.configs.find(kind);
  return it == request.configs.end() ? vnf::VnfConfig{} : it->second;
}

std::string Join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

Orchestrator::Orchestrator(Domain domain, Infrastructure infra, Costs costs,
                           std::unique_ptr<PlacementStrategy> placement)
    : domain_(domain),
      infra_(std::move(infra)),
      costs_(costs),
      placement_(std::move(placement)) {
  if (!placement_) throw Error(ErrorCode::kInvalidArgument, "placement strategy is null");
}

int Orchestrator::IdFromUri(std::string_view uri) {
  std::string_view tail = uri.substr(uri.rfind('/') == std::string_view::npos
                                         ? 0
                                         : uri.rfind('/') + 1);
  int id = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), id);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty()) {
    throw Error(ErrorCode::kPlanNotFound, std::string(uri));
  }
  return id;
}

std::string Orchestrator::CreatePlan(const PlanRequest& request) {
  if (!available_) throw Error(ErrorCode::kServiceUnavailable, "orchestrator unreachable");
  if (auto violations = ValidatePlanRequest(request); !violations.empty()) {
    throw Error(ErrorCode::kInvalidPlanRequest, Join(violations));
  }
  OrchestrationPlan plan;
  plan.id = next_id_++;
  plan.uri = "/OrchestrationPlan/" + std::to_string(plan.id);
  plan.request = request;
  plan.created_at = domain_.scheduler.now();
  std::string uri = plan.uri;
  queue_.push_back(plan.id);
  plans_.emplace(plan.id, std::move(plan));
  MaybeStartNext();
  return uri;
}

const OrchestrationPlan& Orchestrator::GetPlan(int id) const {
  auto it = plans_.find(id);
  if (it == plans_.end()) {
    throw Error(ErrorCode::kPlanNotFound, "/OrchestrationPlan/" + std::to_string(id));
  }
  return it->second;
}

std::vector<OrchestrationPlan> Orchestrator::AllPlans() const {
  std::vector<OrchestrationPlan> out;
  for (const auto& [id, plan] : plans_) out.push_back(plan);
  return out;
}

void Orchestrator::UpdatePlan(int id, const PlanRequest& request) {
  auto it = plans_.find(id);
  if (it == plans_.end()) {
    throw Error(ErrorCode::kPlanNotFound, "/OrchestrationPlan/" + std::to_string(id));
  }
  if (it->second.status != PlanStatus::kPending) {
    throw Error(ErrorCode::kPlanAlreadyRunning,
                it->second.uri + " is " + std::string(Name(it->second.status)));
  }
  if (auto violations = ValidatePlanRequest(request); !violations.empty()) {
    throw Error(ErrorCode::kInvalidPlanRequest, Join(violations));
  }
  it->second.request = request;
}

void Orchestrator::DeletePlan(int id) {
  auto it = plans_.find(id);
  if (it == plans_.end()) {
    throw Error(ErrorCode::kPlanNotFound, "/OrchestrationPlan/" + std::to_string(id));
  }
  if (it->second.status == PlanStatus::kRunning) {
    throw Error(ErrorCode::kPlanAlreadyRunning, it->second.uri + " is Running");
  }
  std::erase(queue_, id);
  Rollback(it->second);
  plans_.erase(it);
}

ResourceView Orchestrator::DiscoverDevices() const {
  ResourceView view;
  std::vector<DeviceDescriptor> capable;
  for (const DeviceDescriptor& d : infra_.devices) {
    if (d.device_class == DeviceClass::kB) capable.push_back(d);
  }
  std::sort(capable.begin(), capable.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (DeviceDescriptor& d : capable) {
    const auto hosts = domain_.manager.hosts();
    bool known = std::find(hosts.begin(), hosts.end(), d.id) != hosts.end();
    int free = known ? domain_.manager.FreeCapacity(d.id) : d.capabilities.host_capacity;
    view.hosts.push_back({std::move(d), free});
  }
  return view;
}

void Orchestrator::MaybeStartNext() {
  if (running_ || queue_.empty()) return;
  int id = queue_.front();
  queue_.pop_front();
  running_ = id;
  plans_.at(id).status = PlanStatus::kRunning;
  domain_.scheduler.At(domain_.scheduler.now(), "orchestrator",
                       [this, id] { BeginPhase(id, PhaseKind::kDeploy); });
}

void Orchestrator::BeginPhase(int id, PhaseKind kind) {
  OrchestrationPlan& plan = plans_.at(id);
  Phase& phase = plan.phase(kind);
  phase.status = PlanStatus::kRunning;
  phase.start = domain_.scheduler.now();
  Ticks cost = 0;
  try {
    switch (kind) {
      case PhaseKind::kDeploy:
        cost = RunDeploy(plan);
        break;
      case PhaseKind::kChain:
        cost = RunChain(plan);
        break;
      case PhaseKind::kOverlayCreate:
        cost = RunOverlay(plan);
        break;
    }
  } catch (const Error& error) {
    Fail(plan, kind, error);
    return;
  }
  domain_.scheduler.After(cost, "orchestrator", [this, id, kind] { EndPhase(id, kind); });
}

void Orchestrator::EndPhase(int id, PhaseKind kind) {
  OrchestrationPlan& plan = plans_.at(id);
  Phase& phase = plan.phase(kind);
  phase.status = PlanStatus::kDone;
  phase.end = domain_.scheduler.now();
  if (kind == PhaseKind::kOverlayCreate) {
    plan.status = PlanStatus::kDone;
    Finish(plan);
    return;
  }
  PhaseKind next = kind == PhaseKind::kDeploy ? PhaseKind::kChain : PhaseKind::kOverlayCreate;
  domain_.scheduler.At(domain_.scheduler.now(), "orchestrator",
                       [this, id, next] { BeginPhase(id, next); });
}

void Orchestrator::Fail(OrchestrationPlan& plan, PhaseKind kind, const Error& error) {
  Phase& phase = plan.phase(kind);
  phase.status = PlanStatus::kFailed;
  phase.end = domain_.scheduler.now();
  plan.status = PlanStatus::kFailed;
  plan.error_code = error.code();
  plan.error = error.what();
  Rollback(plan);
  Finish(plan);
}

void Orchestrator::Finish(OrchestrationPlan& plan) {
  running_.reset();
  const OrchestrationPlan snapshot = plan;
  for (const Listener& listener : listeners_) listener(snapshot);
  MaybeStartNext();
}

void Orchestrator::Rollback(OrchestrationPlan& plan) {
  Ticks now = domain_.scheduler.now();
  if (!plan.registration_key.empty()) {
    domain_.controller.UnregisterChain(plan.registration_key);
    plan.registration_key.clear();
  }
  for (auto it = plan.instantiated.rbegin(); it != plan.instantiated.rend(); ++it) {
    const std::string& id = *it;
    if (domain_.overlay.IsMember(id, overlay::OverlayId::kGateway)) {
      domain_.overlay.Leave(id, overlay::OverlayId::kGateway, now);
    }
    if (auto sw = domain_.fabric.AttachmentOf(fabric::VnfRef{id})) {
      domain_.fabric.Detach(*sw, fabric::VnfRef{id});
    }
    if (domain_.manager.IsLive(id)) domain_.manager.Terminate(id);
  }
  plan.instantiated.clear();
}

Ticks Orchestrator::RunDeploy(OrchestrationPlan& plan) {
  const PlanRequest& request = plan.request;
  const Ticks d = costs_.hop_delay;
  plan.required = request.chain.functions;
  if (request.replicas > 1) plan.required.push_back(kLoadBalancer);
  plan.used.clear();
  plan.bindings.clear();

  // Discovery and catalogue check, then every store lookup before anything
  // is instantiated so a missing function leaves no residue.
  ResourceView view = DiscoverDevices();
  Ticks cost = 2 * d + d;
  struct Need {
    VnfKind kind;
    vnf::VnfConfig config;
    std::vector<std::string> reuse;
    int create = 0;
    const vnf::VnfPackage* package = nullptr;
  };
  std::vector<Need> needs;
  for (const VnfKind& kind : request.chain.functions) {
    Need need{kind, ConfigFor(request, kind), {}, 0, nullptr};
    for (const vnf::VnfInstance& inst : domain_.manager.catalogue().ByKind(kind)) {
      if (static_cast<int>(need.reuse.size()) < request.replicas &&
          inst.config == need.config) {
        need.reuse.push_back(inst.instance_id);
      }
    }
    need.create = request.replicas - static_cast<int>(need.reuse.size());
    if (need.create > 0) need.package = &domain_.store.Lookup(kind);
    needs.push_back(std::move(need));
  }
  const vnf::VnfPackage* lb_package =
      request.replicas > 1 ? &domain_.store.Lookup(kLoadBalancer) : nullptr;

  std::map<std::string, int> per_host;
  auto place = [&](const vnf::VnfPackage& package, const std::string& role,
                   const vnf::VnfConfig& config) {
    std::string host = placement_->Choose(role, view);
    vnf::VnfInstance inst = domain_.manager.Instantiate(package, host, config);
    plan.instantiated.push_back(inst.instance_id);
    for (HostView& h : view.hosts) {
      if (h.device.id == host) --h.free_slots;
    }
    ++per_host[host];
    domain_.manet.Link(inst.instance_id, host);
    if (auto sw = infra_.host_switch.find(host); sw != infra_.host_switch.end()) {
      domain_.fabric.Attach(sw->second, fabric::VnfRef{inst.instance_id});
    }
    return inst.instance_id;
  };

  try {
    for (Need& need : needs) {
      std::vector<std::string> members = need.reuse;
      for (int i = 0; i < need.create; ++i) {
        members.push_back(place(*need.package, need.kind.ToString(), need.config));
      }
      std::string front = members.front();
      if (request.replicas > 1) {
        vnf::VnfConfig lb_config = vnf::LbConfig{need.kind, members};
        auto lb = domain_.manager.CatalogueCheck(kLoadBalancer, &lb_config);
        front = lb ? lb->instance_id
                   : place(*lb_package, "LB1/" + need.kind.ToString(), lb_config);
      }
      plan.bindings[need.kind] = front;
      plan.used.insert(plan.used.end(), members.begin(), members.end());
      if (front != members.front()) plan.used.push_back(front);
    }
  } catch (const Error&) {
    Rollback(plan);
    throw;
  }

  if (!per_host.empty()) {
    int busiest = 0;
    for (const auto& [host, n] : per_host) busiest = std::max(busiest, n);
    // Store fetch, then hosts instantiate in parallel and serially within.
    cost += 2 * d + busiest * 2 * d;
  }
  return cost;
}

Ticks Orchestrator::RunChain(OrchestrationPlan& plan) {
  control::ChainRegistration reg{plan.request.chain, plan.request.classification,
                                 plan.request.ingress, plan.request.egress, plan.bindings};
  control::CompiledChain compiled = domain_.controller.Compile(reg);
  domain_.controller.RegisterChain(reg);
  plan.registration_key = reg.Key();
  plan.path.clear();
  for (const auto& [sw, entry] : compiled.entries) plan.path.push_back(sw);
  // Northbound registration, then the southbound push and its ack.
  return 3 * costs_.hop_delay;
}

Ticks Orchestrator::RunOverlay(OrchestrationPlan& plan) {
  using overlay::OverlayId;
  const Ticks now = domain_.scheduler.now();
  overlay::OverlayNetwork& net = domain_.overlay;
  if (!net.Created(OverlayId::kGateway)) net.Create(OverlayId::kGateway, infra_.fixed_node, now);

  Ticks cost = 0;
  plan.overlay_joined.clear();
  auto join = [&](const std::string& node) {
    Ticks c = net.Join(node, OverlayId::kGateway, now);
    if (c > 0) plan.overlay_joined.push_back(node);
    cost += c;
  };
  for (const std::string& sw : plan.path) {
    if (auto host = infra_.switch_host.find(sw); host != infra_.switch_host.end()) {
      join(host->second);
    }
  }
  for (const std::string& instance : plan.used) join(instance);
  for (const std::string& device_id : plan.request.devices) {
    auto device = std::find_if(infra_.devices.begin(), infra_.devices.end(),
                               [&](const auto& d) { return d.id == device_id; });
    if (device == infra_.devices.end()) {
      throw Error(ErrorCode::kUnreachable, "unknown device " + device_id);
    }
    if (device->device_class == DeviceClass::kB) {
      join(device->id);
    } else {
      join(*device->proxy);
      net.JoinViaProxy(device->id, *device->proxy, OverlayId::kGateway, now);
    }
  }
  return cost;
}

}  // namespace iotgw::orchestrator
