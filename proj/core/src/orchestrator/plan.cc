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

#include "iotgw/orchestrator/plan.h"

#include <set>

#include "json.hpp"

namespace iotgw::orchestrator {

using nlohmann::json;

std::string_view Name(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::kDeploy:
      return "Deploy";
    case PhaseKind::kChain:
      return "Chain";
    case PhaseKind::kOverlayCreate:
      return "OverlayCreate";
  }
  return "?";
}

std::string_view Name(PlanStatus status) {
  switch (status) {
    case PlanStatus::kPending:
      return "Pending";
    case PlanStatus::kRunning:
      return "Running";
    case PlanStatus::kDone:
      return "Done";
    case PlanStatus::kFailed:
      return "Failed";
  }
  return "?";
}

std::vector<std::string> ValidatePlanRequest(const PlanRequest& request) {
  std::vector<std::string> out = ValidateChain(request.chain);
  if (request.classification.Empty()) out.emplace_back("classification is empty");
  if (request.ingress.empty()) out.emplace_back("ingress switch is empty");
  if (request.replicas < 1) out.emplace_back("replicas must be at least 1");
  for (const auto& [kind, config] : request.configs) {
    if (std::find(request.chain.functions.begin(), request.chain.functions.end(), kind) ==
        request.chain.functions.end()) {
      out.push_back("config for " + kind.ToString() + " which is not in the chain");
    }
  }
  return out;
}

Ticks OrchestrationPlan::OrchestrationTime() const {
  Ticks total = 0;
  for (const Phase& phase : phases) total += phase.Duration();
  return total;
}

namespace {

[[noreturn]] void Invalid(const std::string& why) {
  throw Error(ErrorCode::kInvalidPlanRequest, why);
}

json TargetJson(const fabric::Target& target) {
  struct Visitor {
    json operator()(const fabric::SwitchRef& t) const { return {{"switch", t.id}}; }
    json operator()(const fabric::VnfRef& t) const { return {{"vnf", t.instance_id}}; }
    json operator()(const fabric::DeviceRef& t) const { return {{"device", t.id}}; }
    json operator()(const fabric::AppAddr& t) const { return {{"app", t.addr}}; }
  };
  return std::visit(Visitor{}, target);
}

fabric::Target TargetFrom(const json& j) {
  if (!j.is_object() || j.size() != 1) Invalid("egress must be an object with one key");
  const auto& [key, value] = *j.items().begin();
  if (!value.is_string()) Invalid("egress value must be a string");
  std::string id = value.get<std::string>();
  if (key == "switch") return fabric::SwitchRef{id};
  if (key == "vnf") return fabric::VnfRef{id};
  if (key == "device") return fabric::DeviceRef{id};
  if (key == "app") return fabric::AppAddr{id};
  Invalid("unknown egress kind " + key);
}

json AppJson(const AppRequirements& r) {
  return {{"protocol", Name(r.protocol)},
          {"info_model", Name(r.info_model)},
          {"aggregation", Name(r.aggregation)}};
}

json DevJson(const DeviceProps& d) {
  return {{"protocol", Name(d.protocol)}, {"info_model", Name(d.info_model)}};
}

std::string Str(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) Invalid(std::string("missing string field ") + key);
  return it->get<std::string>();
}

ProtocolKind ProtocolFrom(const json& j, const char* key) {
  auto v = ParseProtocol(Str(j, key));
  if (!v) Invalid("unknown protocol " + Str(j, key));
  return *v;
}

InfoModelKind ModelFrom(const json& j, const char* key) {
  auto v = ParseInfoModel(Str(j, key));
  if (!v) Invalid("unknown info model " + Str(j, key));
  return *v;
}

VnfKind KindFrom(const std::string& text) {
  auto kind = VnfKind::Parse(text);
  if (!kind) Invalid("unknown function " + text);
  return *kind;
}

json MatchJson(const fabric::MatchPredicate& m) {
  json j = json::object();
  if (m.app_requirements) j["app_requirements"] = AppJson(*m.app_requirements);
  if (m.device_props) j["device_props"] = DevJson(*m.device_props);
  if (m.app_level_src) j["app_level_src"] = *m.app_level_src;
  if (m.app_level_dst) j["app_level_dst"] = *m.app_level_dst;
  if (m.chain_id) j["chain_id"] = *m.chain_id;
  if (m.protocol) j["protocol"] = Name(*m.protocol);
  return j;
}

fabric::MatchPredicate MatchFrom(const json& j) {
  if (!j.is_object()) Invalid("classification must be an object");
  fabric::MatchPredicate m;
  if (auto it = j.find("app_requirements"); it != j.end()) {
    auto agg = ParseAggregation(Str(*it, "aggregation"));
    if (!agg) Invalid("unknown aggregation");
    m.app_requirements =
        AppRequirements{ProtocolFrom(*it, "protocol"), ModelFrom(*it, "info_model"), *agg};
  }
  if (auto it = j.find("device_props"); it != j.end()) {
    m.device_props = DeviceProps{ProtocolFrom(*it, "protocol"), ModelFrom(*it, "info_model")};
  }
  if (j.contains("app_level_src")) m.app_level_src = Str(j, "app_level_src");
  if (j.contains("app_level_dst")) m.app_level_dst = Str(j, "app_level_dst");
  if (j.contains("chain_id")) m.chain_id = Str(j, "chain_id");
  if (j.contains("protocol")) m.protocol = ProtocolFrom(j, "protocol");
  return m;
}

json ConfigJson(const vnf::VnfConfig& config) {
  struct Visitor {
    json operator()(std::monostate) const { return json::object(); }
    json operator()(const vnf::DaConfig& c) const {
      if (c.mode == vnf::DaMode::kThreshold) {
        return {{"mode", "Threshold"}, {"threshold", c.threshold}};
      }
      return {{"mode", "Average"}, {"window", c.window}};
    }
    json operator()(const vnf::LbConfig& c) const {
      return {{"group", c.group_kind.ToString()}, {"members", c.members}};
    }
    json operator()(const vnf::ModelPair& p) const {
      return {{"model_pair", {Name(p.first), Name(p.second)}}};
    }
    json operator()(const vnf::ProtocolPair& p) const {
      return {{"protocol_pair", {Name(p.first), Name(p.second)}}};
    }
  };
  return std::visit(Visitor{}, config);
}

vnf::VnfConfig ConfigFrom(const json& j) {
  if (!j.is_object()) Invalid("function config must be an object");
  if (j.empty()) return std::monostate{};
  if (j.contains("mode")) {
    std::string mode = Str(j, "mode");
    vnf::DaConfig c;
    if (mode == "Threshold") {
      c.mode = vnf::DaMode::kThreshold;
      if (!j.contains("threshold") || !j["threshold"].is_number()) Invalid("threshold missing");
      c.threshold = j["threshold"].get<double>();
    } else if (mode == "Average") {
      c.mode = vnf::DaMode::kAverage;
      if (!j.contains("window") || !j["window"].is_number_integer()) Invalid("window missing");
      c.window = j["window"].get<int>();
    } else {
      Invalid("unknown aggregator mode " + mode);
    }
    return c;
  }
  if (j.contains("group")) {
    vnf::LbConfig c{KindFrom(Str(j, "group")), {}};
    if (j.contains("members")) c.members = j["members"].get<std::vector<std::string>>();
    return c;
  }
  auto pair_of = [&](const char* key) -> std::pair<std::string, std::string> {
    const json& p = j[key];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      Invalid(std::string(key) + " must be a two-element array");
    }
    return {p[0].get<std::string>(), p[1].get<std::string>()};
  };
  if (j.contains("model_pair")) {
    auto [a, b] = pair_of("model_pair");
    auto from = ParseInfoModel(a);
    auto to = ParseInfoModel(b);
    if (!from || !to) Invalid("unknown info model in model_pair");
    return vnf::ModelPair{*from, *to};
  }
  if (j.contains("protocol_pair")) {
    auto [a, b] = pair_of("protocol_pair");
    auto from = ParseProtocol(a);
    auto to = ParseProtocol(b);
    if (!from || !to) Invalid("unknown protocol in protocol_pair");
    return vnf::ProtocolPair{*from, *to};
  }
  Invalid("unrecognised function config");
}

json RequestJson(const PlanRequest& r) {
  json functions = json::array();
  for (const VnfKind& k : r.chain.functions) functions.push_back(k.ToString());
  json configs = json::object();
  for (const auto& [kind, config] : r.configs) configs[kind.ToString()] = ConfigJson(config);
  return {{"chain", {{"chain_id", r.chain.chain_id}, {"functions", functions}}},
          {"classification", MatchJson(r.classification)},
          {"ingress", r.ingress},
          {"egress", TargetJson(r.egress)},
          {"configs", configs},
          {"devices", r.devices},
          {"replicas", r.replicas}};
}

json PhaseJson(const Phase& phase) {
  json j = {{"phase", Name(phase.kind)}, {"status", Name(phase.status)}};
  j["start"] = phase.start ? json(*phase.start) : json(nullptr);
  j["end"] = phase.end ? json(*phase.end) : json(nullptr);
  return j;
}

json PlanJson(const OrchestrationPlan& plan) {
  json phases = json::array();
  for (const Phase& phase : plan.phases) phases.push_back(PhaseJson(phase));
  json required = json::array();
  for (const VnfKind& k : plan.required) required.push_back(k.ToString());
  json j = {{"id", plan.id},
            {"uri", plan.uri},
            {"status", Name(plan.status)},
            {"created_at", plan.created_at},
            {"request", RequestJson(plan.request)},
            {"required", required},
            {"phases", phases},
            {"instantiated", plan.instantiated},
            {"used", plan.used},
            {"path", plan.path},
            {"overlay_joined", plan.overlay_joined},
            {"orchestration_ticks", plan.OrchestrationTime()}};
  if (plan.error_code) {
    j["error"] = {{"code", ErrorCodeName(*plan.error_code)}, {"detail", plan.error}};
  }
  return j;
}

}  // namespace

std::string PlanToJson(const OrchestrationPlan& plan) { return PlanJson(plan).dump(); }

std::string PlansToJson(const std::vector<OrchestrationPlan>& plans) {
  json out = json::array();
  for (const OrchestrationPlan& plan : plans) out.push_back(PlanJson(plan));
  return out.dump();
}

std::string PlanRequestToJson(const PlanRequest& request) {
  return RequestJson(request).dump();
}

PlanRequest PlanRequestFromJson(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) Invalid("body is not a JSON object");
  try {
    PlanRequest r;
    auto chain = j.find("chain");
    if (chain == j.end() || !chain->is_object()) Invalid("missing chain");
    r.chain.chain_id = Str(*chain, "chain_id");
    auto functions = chain->find("functions");
    if (functions == chain->end() || !functions->is_array()) Invalid("missing chain.functions");
    for (const json& f : *functions) {
      if (!f.is_string()) Invalid("function names must be strings");
      r.chain.functions.push_back(KindFrom(f.get<std::string>()));
    }
    if (!j.contains("classification")) Invalid("missing classification");
    r.classification = MatchFrom(j["classification"]);
    r.ingress = Str(j, "ingress");
    if (!j.contains("egress")) Invalid("missing egress");
    r.egress = TargetFrom(j["egress"]);
    if (auto it = j.find("configs"); it != j.end()) {
      if (!it->is_object()) Invalid("configs must be an object");
      for (const auto& [name, config] : it->items()) {
        r.configs[KindFrom(name)] = ConfigFrom(config);
      }
    }
    if (auto it = j.find("devices"); it != j.end()) {
      r.devices = it->get<std::vector<std::string>>();
    }
    if (auto it = j.find("replicas"); it != j.end()) {
      if (!it->is_number_integer()) Invalid("replicas must be an integer");
      r.replicas = it->get<int>();
    }
    return r;
  } catch (const json::exception& e) {
    Invalid(e.what());
  }
}

}  // namespace iotgw::orchestrator
