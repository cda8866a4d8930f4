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

#include "iotgw/sim/world.h"

#include <algorithm>

#include "iotgw/model/codec.h"
#include "iotgw/model/error.h"
#include "iotgw/vnf/functions.h"

namespace iotgw::sim {

namespace {

std::vector<DeviceDescriptor> Descriptors(const ScenarioConfig& cfg) {
  std::vector<DeviceDescriptor> out;
  for (const DeviceConfig& d : cfg.devices) out.push_back(d.descriptor);
  return out;
}

const ScenarioConfig& Checked(const ScenarioConfig& cfg) {
  if (auto violations = cfg.Validate(); !violations.empty()) {
    throw Error(ErrorCode::kInvalidConfig, violations.front());
  }
  return cfg;
}

}  // namespace

vnf::FeasibilityTable BuildFeasibility(const ScenarioConfig& cfg) {
  vnf::FeasibilityTable table =
      cfg.default_feasibility ? vnf::FeasibilityTable::Default() : vnf::FeasibilityTable{};
  for (const FeasibilityDecl& decl : cfg.feasibility) {
    if (decl.kind.type == VnfType::kIMC) {
      auto from = ParseInfoModel(decl.from);
      auto to = ParseInfoModel(decl.to);
      if (!from || !to) throw Error(ErrorCode::kInvalidConfig, "bad models for " + decl.kind.ToString());
      table.DeclareImc(decl.kind, *from, *to);
    } else {
      auto from = ParseProtocol(decl.from);
      auto to = ParseProtocol(decl.to);
      if (!from || !to) throw Error(ErrorCode::kInvalidConfig, "bad protocols for " + decl.kind.ToString());
      table.DeclarePc(decl.kind, *from, *to);
    }
  }
  return table;
}

vnf::GatewayFunctionsStore BuildStore(const ScenarioConfig& cfg,
                                      const vnf::FeasibilityTable& table) {
  vnf::GatewayFunctionsStore store(table);
  std::map<VnfKind, std::string> packages;
  if (cfg.default_store) {
    packages[{VnfType::kDA, 1}] = "1.0";
    packages[{VnfType::kLB, 1}] = "1.0";
    for (const auto& [kind, pair] : table.imc_entries()) packages[kind] = "1.0";
    for (const auto& [kind, pair] : table.pc_entries()) packages[kind] = "1.0";
  }
  for (const auto& [kind, version] : cfg.store_packages) packages[kind] = version;
  for (const auto& [kind, version] : packages) {
    if (!cfg.store_exclude.contains(kind)) store.Onboard({kind, version, {}});
  }
  return store;
}

class World::Hop : public fabric::VnfHopHandler {
 public:
  explicit Hop(World& world) : world_(world) {}

  bool IsLive(const std::string& instance_id) const override {
    return world_.manager_.IsLive(instance_id);
  }

  Result Invoke(const std::string& instance_id, const Envelope& env, Ticks) override {
    vnf::VnfOutput out = world_.runtime_.Invoke(instance_id, env);
    ++calls_;
    const Costs& c = world_.cfg_.costs;
    Ticks elapsed = 2 * c.hop_delay + c.per_record * static_cast<Ticks>(out.records);
    std::string note = "processed " + std::to_string(out.records) + " records";
    if (!out.delegated_to.empty()) note += " via " + out.delegated_to.front();
    world_.Log(instance_id, note);
    return {std::move(out.envelope), elapsed};
  }

  std::optional<Result> Collect(const Envelope& request, Ticks now) override {
    return world_.Collect(request, now);
  }

  std::size_t calls() const { return calls_; }

 private:
  World& world_;
  std::size_t calls_ = 0;
};

World::World(ScenarioConfig cfg)
    : cfg_(std::move(cfg)),
      table_(BuildFeasibility(Checked(cfg_))),
      store_(BuildStore(cfg_, table_)),
      manager_(Descriptors(cfg_)),
      controller_(fabric_, manager_),
      overlay_(manet_, cfg_.costs.hop_delay, cfg_.costs.join),
      runtime_(manager_, table_),
      hop_(std::make_unique<Hop>(*this)) {
  for (const std::string& sw : cfg_.switches) fabric_.AddSwitch(sw);
  for (const auto& [a, b] : cfg_.links) fabric_.Connect(a, b);
  fabric_.SetClassifier(cfg_.classifier);

  manet_.AddNode(cfg_.fixed_node);
  for (const std::string& sw : cfg_.switches) manet_.Link(cfg_.SwitchHost(sw), cfg_.fixed_node);
  for (const AppConfig& app : cfg_.apps) manet_.Link(app.node, cfg_.fixed_node);
  for (const DeviceConfig& d : cfg_.devices) {
    manet_.Link(d.descriptor.id, cfg_.fixed_node);
    if (d.descriptor.proxy) manet_.Link(d.descriptor.id, *d.descriptor.proxy);
    if (!d.switch_id.empty()) fabric_.Attach(d.switch_id, fabric::DeviceRef{d.descriptor.id});
  }

  orchestrator::Infrastructure infra;
  infra.devices = Descriptors(cfg_);
  infra.fixed_node = cfg_.fixed_node;
  for (const DeviceConfig& d : cfg_.devices) {
    if (d.descriptor.device_class == DeviceClass::kB && !d.switch_id.empty()) {
      infra.host_switch[d.descriptor.id] = d.switch_id;
    }
  }
  for (const std::string& sw : cfg_.switches) infra.switch_host[sw] = cfg_.SwitchHost(sw);

  std::unique_ptr<orchestrator::PlacementStrategy> placement =
      std::make_unique<orchestrator::RandomPlacement>(cfg_.seed);
  if (cfg_.placement_strategy == "pinned" || !cfg_.placement.empty()) {
    placement = std::make_unique<orchestrator::PinnedPlacement>(cfg_.placement,
                                                                std::move(placement));
  }
  orchestrator_ = std::make_unique<orchestrator::Orchestrator>(
      orchestrator::Domain{manager_, store_, fabric_, controller_, manet_, overlay_, loop_},
      std::move(infra), cfg_.costs, std::move(placement));

  bus_ = std::make_unique<agents::SignalingBus>(
      loop_, cfg_.costs.hop_delay,
      [this](const std::string& source, const std::string& event) { Log(source, event); });
  vnf_agent_ = std::make_unique<agents::VnfAgent>(*bus_, *orchestrator_, table_, cfg_.classifier);
  provider_ = std::make_unique<agents::IotProviderAgent>(*bus_, *vnf_agent_, Descriptors(cfg_),
                                                         cfg_.costs.retry_after);
  for (const AppConfig& app : cfg_.apps) {
    agents::ServiceRequest req;
    req.app_id = app.id;
    req.app_node = app.node;
    req.requirements = app.requirements;
    req.devices = app.devices;
    req.threshold = app.threshold;
    req.window = app.window;
    req.order = app.order;
    req.replicas = app.replicas;
    auto agent = std::make_unique<agents::ApplicationAgent>(*bus_, *provider_, req, app.retries);
    const std::string id = app.id;
    agent->OnAvailable([this, id](const agents::Notification& n) {
      Guard(id, [&] { StartFlow(id, n); });
    });
    apps_.emplace(id, std::move(agent));
    outcomes_[id].app_id = id;
  }
  loop_.set_after_step([this] { Sync(); });
}

World::~World() = default;

agents::ApplicationAgent& World::app(const std::string& id) {
  auto it = apps_.find(id);
  if (it == apps_.end()) throw Error(ErrorCode::kInvalidArgument, "unknown app " + id);
  return *it->second;
}

void World::Log(const std::string& source, const std::string& event) {
  log_.Add(loop_.now(), source, event);
}

void World::Sync() {
  const auto& trace = fabric_.trace();
  for (; trace_synced_ < trace.size(); ++trace_synced_) {
    Log("fabric", trace[trace_synced_].ToString());
  }
  const auto& events = overlay_.events();
  for (; overlay_synced_ < events.size(); ++overlay_synced_) {
    Log("overlay", events[overlay_synced_].ToString());
  }
}

void World::Guard(const std::string& source, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& error) {
    Sync();
    errors_.push_back(source + ": " + error.what());
    Log(source, std::string("error ") + error.what());
  }
}

void World::SetUpOverlays() {
  if (cfg_.apps.empty() || overlay_.Created(overlay::OverlayId::kApplication)) return;
  const Ticks now = loop_.now();
  overlay_.Create(overlay::OverlayId::kApplication, cfg_.apps.front().node, now);
  for (const AppConfig& app : cfg_.apps) {
    overlay_.Join(app.node, overlay::OverlayId::kApplication, now);
  }
  overlay_.Join(cfg_.fixed_node, overlay::OverlayId::kApplication, now);
  Sync();
}

void World::Start() {
  SetUpOverlays();
  for (const AppConfig& app : cfg_.apps) {
    if (!app.trigger.empty()) continue;
    const std::string id = app.id;
    loop_.At(app.start, id, [this, id] { StartApp(id); });
  }
}

void World::StartApp(const std::string& app_id) {
  agents::ApplicationAgent& agent = app(app_id);
  if (agent.started()) return;
  Log(app_id, "request service");
  agent.Start();
}

void World::StartFlow(const std::string& app_id, const agents::Notification& n) {
  const AppConfig& ac = *cfg_.App(app_id);
  const DeviceConfig* dev = cfg_.Device(ac.devices.front());
  if (dev == nullptr) throw Error(ErrorCode::kNoMatchingDevices, ac.devices.front());
  Body body = RawValues{};
  if (ac.command) {
    std::string_view command = *ac.command;
    std::size_t q = command.find('?');
    body = vnf::RobotRequest(command.substr(0, q),
                             q == std::string_view::npos ? "" : command.substr(q + 1));
  }
  Envelope env = app(app_id).ContactClassifier(n, dev->descriptor.props,
                                               ac.requirements.protocol, std::move(body));
  if (ac.command) {
    env.SetHeader("http.content_type", "application/senml+json");
    env.SetHeader("http.method", "POST");
  }
  flow_started_[app_id] = loop_.now();
  Log(app_id, "contact classifier " + n.classifier + " for chain " + n.chain_id);
  overlay::OverlayMsg msg{overlay::OverlayId::kApplication, ac.node, cfg_.fixed_node, env, {}};
  overlay::Delivery delivery = overlay_.Route(std::move(msg), loop_.now());
  ++overlay_messages_;
  Envelope payload = delivery.msg.payload;
  loop_.At(delivery.deliver_at, cfg_.classifier, [this, app_id, payload] {
    Guard(cfg_.classifier, [&] { AtSwitch(app_id, cfg_.classifier, payload); });
  });
}

std::optional<fabric::VnfHopHandler::Result> World::Collect(const Envelope& request,
                                                            Ticks now) {
  const AppConfig* ac = cfg_.App(request.src());
  if (ac == nullptr || ac->command) return std::nullopt;
  const DeviceConfig& dev = *cfg_.Device(ac->devices.front());
  const std::string& id = dev.descriptor.id;
  Envelope data(dev.descriptor.props.protocol, request.src(), request.dst(),
                RawValues{dev.readings});
  for (const auto& [key, value] : request.headers()) {
    if (key != header::kSrc && key != header::kDst) data.SetHeader(key, value);
  }
  for (const std::string& hop : request.trace()) data.AppendTrace(hop);
  // Class-A devices answer through their proxy.
  std::string from = cfg_.classifier;
  if (dev.descriptor.proxy && *dev.descriptor.proxy != cfg_.fixed_node) {
    data.AppendTrace(from + "|request:" + *dev.descriptor.proxy);
    from = *dev.descriptor.proxy;
  }
  data.AppendTrace(from + "|request:" + id);
  data.AppendTrace(id + "|readings:" + cfg_.classifier);
  const Ticks legs = from == cfg_.classifier ? 2 : 3;
  const Ticks elapsed = legs * cfg_.costs.hop_delay;
  data.SetHeader(header::kDeviceId, id);
  if (!dev.quantity.empty()) data.SetHeader(header::kQuantity, dev.quantity);
  if (!dev.unit.empty()) data.SetHeader(header::kUnit, dev.unit);
  data.SetHeader(header::kFirstTick, std::to_string(now + elapsed));
  if (dev.descriptor.props.protocol == ProtocolKind::kCoapLike) {
    data.SetHeader("coap.content_format", "0");
  } else if (dev.descriptor.props.protocol == ProtocolKind::kHttpLike) {
    data.SetHeader("http.content_type", "text/plain;charset=utf-8");
  }
  Log(cfg_.classifier, "collected " + std::to_string(dev.readings.size()) + " readings of " + id);
  return fabric::VnfHopHandler::Result{std::move(data), elapsed};
}

void World::AtSwitch(const std::string& app_id, const std::string& switch_id, Envelope env) {
  ++data_hops_;
  const Ticks now = loop_.now();
  std::vector<fabric::Emission> out = fabric_.ProcessPacket(switch_id, std::move(env), hop_.get(), now);
  Sync();
  if (out.empty()) Log(switch_id, "flow of " + app_id + " ends here");
  const Ticks d = cfg_.costs.hop_delay;
  for (fabric::Emission& e : out) {
    const Ticks when = now + e.offset + d;
    if (const auto* next = std::get_if<fabric::SwitchRef>(&e.target)) {
      std::string next_id = next->id;
      loop_.At(when, next_id, [this, app_id, next_id, env = std::move(e.envelope)] {
        Guard(next_id, [&] { AtSwitch(app_id, next_id, env); });
      });
    } else if (const auto* device = std::get_if<fabric::DeviceRef>(&e.target)) {
      std::string device_id = device->id;
      loop_.At(when, device_id, [this, app_id, device_id, env = std::move(e.envelope)] {
        Guard(device_id, [&] { AtDevice(app_id, device_id, env); });
      });
    } else if (std::holds_alternative<fabric::AppAddr>(e.target)) {
      loop_.At(when, app_id, [this, app_id, env = std::move(e.envelope)] {
        Guard(app_id, [&] { AtApp(app_id, env); });
      });
    }
  }
}

void World::AtDevice(const std::string& app_id, const std::string& device_id, Envelope env) {
  AppOutcome& outcome = outcomes_[app_id];
  if (const auto* command = std::get_if<RobotCommand>(&env.body())) {
    Log(device_id, "executes " + command->verb + " over " + std::string(Name(env.protocol())));
    outcome.commands.push_back(*command);
    outcome.e2e = loop_.now() - flow_started_[app_id];
    outcome.trace = env.trace();
    return;
  }
  const AppConfig& ac = *cfg_.App(app_id);
  Log(device_id, "replies to " + app_id);
  overlay::OverlayMsg msg{overlay::OverlayId::kGateway, device_id, ac.node, std::move(env), {}};
  overlay::Delivery delivery =
      overlay_.CrossDeliver(std::move(msg), overlay::OverlayId::kApplication, loop_.now());
  overlay_messages_ += 2;
  loop_.At(delivery.deliver_at, app_id, [this, app_id, msg = std::move(delivery.msg)] {
    Guard(app_id, [&] {
      overlay_.CheckDeliverable(msg);
      AtApp(app_id, msg.payload);
    });
  });
}

void World::AtApp(const std::string& app_id, Envelope env) {
  AppOutcome& outcome = outcomes_[app_id];
  std::vector<CanonicalRecord> records = vnf::RecordsOf(env.body(), vnf::ContextFromHeaders(env));
  Log(app_id, "received " + std::to_string(records.size()) + " records as " +
                  std::string(Name(ModelOf(env.body()))));
  outcome.records.insert(outcome.records.end(), records.begin(), records.end());
  outcome.e2e = loop_.now() - flow_started_[app_id];
  outcome.trace = env.trace();
  for (const AppConfig& other : cfg_.apps) {
    if (other.trigger != app_id || app(other.id).started()) continue;
    bool alarm = std::any_of(records.begin(), records.end(),
                             [&](const CanonicalRecord& r) { return r.value > other.alarm; });
    if (alarm) {
      Log(app_id, "alarm triggers " + other.id);
      StartApp(other.id);
    }
  }
}

MetricsReport World::Report() const {
  MetricsReport report;
  for (const AppConfig& ac : cfg_.apps) {
    AppOutcome outcome = outcomes_.at(ac.id);
    const agents::ApplicationAgent& agent = *apps_.at(ac.id);
    outcome.notification = agent.notification();
    outcome.requested_at = agent.requested_at();
    outcome.notified_at = agent.notified_at();
    if (outcome.notification && !outcome.notification->plan_uri.empty()) {
      int id = orchestrator::Orchestrator::IdFromUri(outcome.notification->plan_uri);
      for (const auto& plan : orchestrator_->AllPlans()) {
        if (plan.id == id) outcome.plan = plan;
      }
    }
    if (auto t = outcome.ProvisioningTime()) report.provisioning_time += *t;
    report.apps.push_back(std::move(outcome));
  }
  for (const orchestrator::OrchestrationPlan& plan : orchestrator_->AllPlans()) {
    if (plan.status != orchestrator::PlanStatus::kDone) continue;
    ++report.plans_done;
    report.orchestration_time += plan.OrchestrationTime();
    report.deploy_time += plan.phase(orchestrator::PhaseKind::kDeploy).Duration();
    report.chain_time += plan.phase(orchestrator::PhaseKind::kChain).Duration();
    report.overlay_time += plan.phase(orchestrator::PhaseKind::kOverlayCreate).Duration();
    report.instantiations += plan.InstantiationCount();
  }
  report.vnf_invocations.insert(runtime_.invocations().begin(), runtime_.invocations().end());
  report.messages["signaling"] = bus_->messages();
  report.messages["data"] = data_hops_;
  report.messages["overlay"] = overlay_messages_;
  report.messages["vnf"] = hop_->calls();
  report.gateway_overlay_size = overlay_.RegistrySize(overlay::OverlayId::kGateway);
  report.application_overlay_size = overlay_.RegistrySize(overlay::OverlayId::kApplication);
  report.errors = errors_;
  return report;
}

}  // namespace iotgw::sim
