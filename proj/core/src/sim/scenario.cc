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

#include "iotgw/sim/scenario.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "iotgw/model/codec.h"
#include "iotgw/model/error.h"

namespace iotgw::sim {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(Trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

class LineParser {
 public:
  explicit LineParser(int line) : line_(line) {}

  [[noreturn]] void Fail(const std::string& why) const {
    throw Error(ErrorCode::kInvalidConfig, "line " + std::to_string(line_) + ": " + why);
  }

  std::string Unescape(std::string_view s) const {
    try {
      return PercentUnescape(s);
    } catch (const Error& e) {
      Fail(e.detail());
    }
  }

  std::map<std::string, std::string> Fields(std::string_view value) const {
    std::map<std::string, std::string> out;
    for (std::string_view field : Split(value, ';')) {
      if (field.empty()) continue;
      std::size_t colon = field.find(':');
      if (colon == std::string_view::npos) Fail("field without ':' in '" + std::string(field) + "'");
      std::string key(Trim(field.substr(0, colon)));
      if (!out.emplace(key, std::string(Trim(field.substr(colon + 1)))).second) {
        Fail("duplicate field " + key);
      }
    }
    return out;
  }

  std::vector<std::string> List(std::string_view value) const {
    std::vector<std::string> out;
    for (std::string_view item : Split(value, ',')) {
      if (item.empty()) Fail("empty list item");
      out.push_back(Unescape(item));
    }
    return out;
  }

  template <typename T = std::int64_t>
  T Int(std::string_view text) const {
    T v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
      Fail("not an integer: '" + std::string(text) + "'");
    }
    return v;
  }

  double Decimal(std::string_view text) const {
    double v = 0;
    if (!ParseDecimal(text, v)) Fail("not a number: '" + std::string(text) + "'");
    return v;
  }

  bool Bool(std::string_view text) const {
    if (text == "true") return true;
    if (text == "false") return false;
    Fail("expected true or false, got '" + std::string(text) + "'");
  }

  VnfKind Kind(std::string_view text) const {
    auto kind = VnfKind::Parse(text);
    if (!kind) Fail("unknown function '" + std::string(text) + "'");
    return *kind;
  }

  ProtocolKind Protocol(std::string_view text) const {
    auto v = ParseProtocol(text);
    if (!v) Fail("unknown protocol '" + std::string(text) + "'");
    return *v;
  }

  InfoModelKind Model(std::string_view text) const {
    auto v = ParseInfoModel(text);
    if (!v) Fail("unknown info model '" + std::string(text) + "'");
    return *v;
  }

 private:
  int line_;
};

// Consumes fields from a parsed map, rejecting any left unread.
class FieldReader {
 public:
  FieldReader(const LineParser& p, std::map<std::string, std::string> fields)
      : p_(p), fields_(std::move(fields)) {}

  std::optional<std::string> Take(const std::string& key) {
    auto it = fields_.find(key);
    if (it == fields_.end()) return std::nullopt;
    std::string v = it->second;
    fields_.erase(it);
    return v;
  }

  std::string Require(const std::string& key) {
    auto v = Take(key);
    if (!v) p_.Fail("missing field " + key);
    return *v;
  }

  void Done() const {
    if (!fields_.empty()) p_.Fail("unknown field " + fields_.begin()->first);
  }

 private:
  const LineParser& p_;
  std::map<std::string, std::string> fields_;
};

DeviceConfig ParseDevice(const LineParser& p, const std::string& id, std::string_view value) {
  FieldReader r(p, p.Fields(value));
  DeviceConfig d;
  d.descriptor.id = id;
  auto cls = ParseDeviceClass(r.Require("class"));
  if (!cls) p.Fail("unknown device class");
  d.descriptor.device_class = *cls;
  d.descriptor.props.protocol = p.Protocol(r.Require("protocol"));
  d.descriptor.props.info_model = p.Model(r.Require("model"));
  if (auto v = r.Take("capacity")) d.descriptor.capabilities.host_capacity = static_cast<int>(p.Int(*v));
  if (auto v = r.Take("energy")) d.descriptor.capabilities.energy_pct = static_cast<int>(p.Int(*v));
  if (auto v = r.Take("x")) d.descriptor.capabilities.location.x = p.Decimal(*v);
  if (auto v = r.Take("y")) d.descriptor.capabilities.location.y = p.Decimal(*v);
  if (auto v = r.Take("response")) d.descriptor.capabilities.response_time = p.Int(*v);
  if (auto v = r.Take("proxy")) d.descriptor.proxy = p.Unescape(*v);
  if (auto v = r.Take("switch")) d.switch_id = p.Unescape(*v);
  if (auto v = r.Take("quantity")) d.quantity = p.Unescape(*v);
  if (auto v = r.Take("unit")) d.unit = p.Unescape(*v);
  if (auto v = r.Take("readings")) {
    for (const std::string& item : p.List(*v)) d.readings.push_back(p.Decimal(item));
  }
  r.Done();
  return d;
}

AppConfig ParseApp(const LineParser& p, const std::string& id, std::string_view value) {
  FieldReader r(p, p.Fields(value));
  AppConfig a;
  a.id = id;
  a.node = r.Take("node").value_or(id);
  a.requirements.protocol = p.Protocol(r.Require("protocol"));
  a.requirements.info_model = p.Model(r.Require("model"));
  auto agg = ParseAggregation(r.Take("aggregation").value_or("None"));
  if (!agg) p.Fail("unknown aggregation");
  a.requirements.aggregation = *agg;
  if (auto v = r.Take("threshold")) a.threshold = p.Decimal(*v);
  if (auto v = r.Take("window")) a.window = static_cast<int>(p.Int(*v));
  if (auto v = r.Take("devices")) a.devices = p.List(*v);
  if (auto v = r.Take("start")) a.start = p.Int(*v);
  if (auto v = r.Take("retries")) a.retries = static_cast<int>(p.Int(*v));
  if (auto v = r.Take("order")) {
    for (const std::string& k : p.List(*v)) a.order.push_back(p.Kind(k));
  }
  if (auto v = r.Take("replicas")) a.replicas = static_cast<int>(p.Int(*v));
  if (auto v = r.Take("command")) a.command = p.Unescape(*v);
  if (auto v = r.Take("trigger")) a.trigger = p.Unescape(*v);
  if (auto v = r.Take("alarm")) a.alarm = p.Decimal(*v);
  r.Done();
  return a;
}

}  // namespace

std::string ScenarioConfig::SwitchHost(const std::string& switch_id) const {
  if (auto it = switch_hosts.find(switch_id); it != switch_hosts.end()) return it->second;
  if (switch_id == classifier) return fixed_node;
  return "node-" + switch_id;
}

const DeviceConfig* ScenarioConfig::Device(const std::string& id) const {
  for (const DeviceConfig& d : devices) {
    if (d.descriptor.id == id) return &d;
  }
  return nullptr;
}

const AppConfig* ScenarioConfig::App(const std::string& id) const {
  for (const AppConfig& a : apps) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

std::vector<std::string> ScenarioConfig::Validate() const {
  std::vector<std::string> out;
  if (costs.hop_delay < 0 || costs.per_record < 0 || costs.join < 0 || costs.retry_after < 0) {
    out.emplace_back("costs must be non-negative");
  }
  if (k < 1) out.emplace_back("k must be at least 1");
  std::set<std::string> sw(switches.begin(), switches.end());
  if (sw.size() != switches.size()) out.emplace_back("duplicate switch id");
  if (!sw.contains(classifier)) out.push_back("classifier " + classifier + " is not a switch");
  for (const auto& [a, b] : links) {
    if (!sw.contains(a) || !sw.contains(b)) out.push_back("link " + a + "-" + b + " names an unknown switch");
  }
  std::set<std::string> ids;
  for (const DeviceConfig& d : devices) {
    if (!ids.insert(d.descriptor.id).second) out.push_back("duplicate device " + d.descriptor.id);
    for (const std::string& v : ValidateDescriptor(d.descriptor)) {
      out.push_back(d.descriptor.id + ": " + v);
    }
    if (!d.switch_id.empty() && !sw.contains(d.switch_id)) {
      out.push_back(d.descriptor.id + ": unknown switch " + d.switch_id);
    }
  }
  for (const DeviceConfig& d : devices) {
    if (d.descriptor.proxy && *d.descriptor.proxy != fixed_node) {
      const DeviceConfig* proxy = Device(*d.descriptor.proxy);
      if (proxy == nullptr || proxy->descriptor.device_class != DeviceClass::kB) {
        out.push_back(d.descriptor.id + ": proxy must be a class-B device or the fixed node");
      }
    }
  }
  std::set<std::string> app_ids;
  for (const AppConfig& a : apps) {
    if (!app_ids.insert(a.id).second) out.push_back("duplicate app " + a.id);
    if (a.window < 1) out.push_back(a.id + ": window must be at least 1");
    if (a.replicas < 1) out.push_back(a.id + ": replicas must be at least 1");
    for (const std::string& d : a.devices) {
      if (Device(d) == nullptr) out.push_back(a.id + ": unknown device " + d);
    }
    if (!a.trigger.empty() && App(a.trigger) == nullptr) {
      out.push_back(a.id + ": unknown trigger app " + a.trigger);
    }
  }
  return out;
}

ScenarioConfig ParseScenario(std::string_view text) {
  ScenarioConfig cfg;
  std::string section;
  std::set<std::pair<std::string, std::string>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    const LineParser p(line_no);
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') p.Fail("unterminated section header");
      section = std::string(line.substr(1, line.size() - 2));
      static const std::set<std::string> kSections = {
          "scenario", "costs", "topology", "devices", "store",
          "feasibility", "apps", "placement", "experiment"};
      if (!kSections.contains(section)) p.Fail("unknown section [" + section + "]");
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) p.Fail("expected key=value");
    if (section.empty()) p.Fail("key outside any section");
    std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    if (key.empty()) p.Fail("empty key");
    if (!seen.emplace(section, key).second) p.Fail("duplicate key " + key + " in [" + section + "]");

    if (section == "scenario") {
      if (key == "name") cfg.name = p.Unescape(value);
      else if (key == "seed") cfg.seed = p.Int<std::uint64_t>(value);
      else p.Fail("unknown key " + key);
    } else if (section == "costs") {
      Ticks v = p.Int(value);
      if (v < 0) p.Fail("cost must be non-negative");
      if (key == "hop_delay") cfg.costs.hop_delay = v;
      else if (key == "per_record") cfg.costs.per_record = v;
      else if (key == "join") cfg.costs.join = v;
      else if (key == "retry_after") cfg.costs.retry_after = v;
      else p.Fail("unknown key " + key);
    } else if (section == "topology") {
      if (key == "switches") {
        cfg.switches = p.List(value);
      } else if (key == "links") {
        for (const std::string& link : p.List(value)) {
          std::size_t dash = link.find('-');
          if (dash == std::string::npos) p.Fail("link must be A-B");
          cfg.links.emplace_back(link.substr(0, dash), link.substr(dash + 1));
        }
      } else if (key == "classifier") {
        cfg.classifier = p.Unescape(value);
      } else if (key == "fixed_node") {
        cfg.fixed_node = p.Unescape(value);
      } else if (key == "switch_hosts") {
        for (const auto& [sw, host] : p.Fields(value)) cfg.switch_hosts[sw] = p.Unescape(host);
      } else {
        p.Fail("unknown key " + key);
      }
    } else if (section == "devices") {
      cfg.devices.push_back(ParseDevice(p, key, value));
    } else if (section == "store") {
      if (key == "default") cfg.default_store = p.Bool(value);
      else if (key == "exclude") {
        for (const std::string& k : p.List(value)) cfg.store_exclude.insert(p.Kind(k));
      } else cfg.store_packages[p.Kind(key)] = p.Unescape(value);
    } else if (section == "feasibility") {
      if (key == "default") {
        cfg.default_feasibility = p.Bool(value);
      } else {
        std::size_t gt = value.find('>');
        if (gt == std::string_view::npos) p.Fail("conversion must be From>To");
        cfg.feasibility.push_back({p.Kind(key), std::string(Trim(value.substr(0, gt))),
                                   std::string(Trim(value.substr(gt + 1)))});
      }
    } else if (section == "apps") {
      cfg.apps.push_back(ParseApp(p, key, value));
    } else if (section == "placement") {
      if (key == "strategy") {
        cfg.placement_strategy = p.Unescape(value);
        if (cfg.placement_strategy != "random" && cfg.placement_strategy != "pinned") {
          p.Fail("strategy must be random or pinned");
        }
      } else {
        cfg.placement[key] = p.List(value);
      }
    } else if (section == "experiment") {
      if (key == "k") cfg.k = static_cast<int>(p.Int(value));
      else if (key == "upgrade_target") cfg.upgrade_target = p.Unescape(value);
      else if (key == "order_app") cfg.order_app = p.Unescape(value);
      else p.Fail("unknown key " + key);
    }
    if (end == text.size()) break;
  }
  if (auto violations = cfg.Validate(); !violations.empty()) {
    throw Error(ErrorCode::kInvalidConfig, violations.front());
  }
  return cfg;
}

ScenarioConfig LoadScenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseScenario(buf.str());
}

namespace {

// Whitespace is escaped too since the parser trims fields.
std::string Esc(std::string_view s) { return PercentEscape(s, ";,:= \t\r\v\f#[]"); }

std::string JoinList(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) out += (out.empty() ? "" : ",") + Esc(item);
  return out;
}

std::string KindList(const std::vector<VnfKind>& kinds) {
  std::string out;
  for (const VnfKind& k : kinds) out += (out.empty() ? "" : ",") + k.ToString();
  return out;
}

}  // namespace

std::string FormatScenario(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "[scenario]\nname=" << Esc(cfg.name) << "\nseed=" << cfg.seed << "\n\n";
  out << "[costs]\nhop_delay=" << cfg.costs.hop_delay << "\nper_record=" << cfg.costs.per_record
      << "\njoin=" << cfg.costs.join << "\nretry_after=" << cfg.costs.retry_after << "\n\n";
  out << "[topology]\nswitches=" << JoinList(cfg.switches) << "\n";
  if (!cfg.links.empty()) {
    std::vector<std::string> links;
    for (const auto& [a, b] : cfg.links) links.push_back(a + "-" + b);
    out << "links=" << JoinList(links) << "\n";
  }
  out << "classifier=" << Esc(cfg.classifier) << "\nfixed_node=" << Esc(cfg.fixed_node) << "\n";
  if (!cfg.switch_hosts.empty()) {
    out << "switch_hosts=";
    bool first = true;
    for (const auto& [sw, host] : cfg.switch_hosts) {
      out << (first ? "" : ";") << sw << ":" << Esc(host);
      first = false;
    }
    out << "\n";
  }
  out << "\n[devices]\n";
  for (const DeviceConfig& d : cfg.devices) {
    const DeviceDescriptor& desc = d.descriptor;
    out << desc.id << "=class:" << Name(desc.device_class)
        << ";protocol:" << Name(desc.props.protocol) << ";model:" << Name(desc.props.info_model)
        << ";capacity:" << desc.capabilities.host_capacity
        << ";energy:" << desc.capabilities.energy_pct
        << ";x:" << FormatDecimal(desc.capabilities.location.x)
        << ";y:" << FormatDecimal(desc.capabilities.location.y)
        << ";response:" << desc.capabilities.response_time;
    if (desc.proxy) out << ";proxy:" << Esc(*desc.proxy);
    if (!d.switch_id.empty()) out << ";switch:" << Esc(d.switch_id);
    if (!d.quantity.empty()) out << ";quantity:" << Esc(d.quantity);
    if (!d.unit.empty()) out << ";unit:" << Esc(d.unit);
    if (!d.readings.empty()) {
      out << ";readings:";
      for (std::size_t i = 0; i < d.readings.size(); ++i) {
        out << (i ? "," : "") << FormatDecimal(d.readings[i]);
      }
    }
    out << "\n";
  }
  out << "\n[store]\ndefault=" << (cfg.default_store ? "true" : "false") << "\n";
  if (!cfg.store_exclude.empty()) {
    out << "exclude=" << KindList({cfg.store_exclude.begin(), cfg.store_exclude.end()}) << "\n";
  }
  for (const auto& [kind, version] : cfg.store_packages) {
    out << kind.ToString() << "=" << Esc(version) << "\n";
  }
  out << "\n[feasibility]\ndefault=" << (cfg.default_feasibility ? "true" : "false") << "\n";
  for (const FeasibilityDecl& f : cfg.feasibility) {
    out << f.kind.ToString() << "=" << f.from << ">" << f.to << "\n";
  }
  out << "\n[apps]\n";
  for (const AppConfig& a : cfg.apps) {
    out << a.id << "=node:" << Esc(a.node) << ";protocol:" << Name(a.requirements.protocol)
        << ";model:" << Name(a.requirements.info_model)
        << ";aggregation:" << Name(a.requirements.aggregation)
        << ";threshold:" << FormatDecimal(a.threshold) << ";window:" << a.window
        << ";devices:" << JoinList(a.devices) << ";start:" << a.start
        << ";retries:" << a.retries << ";replicas:" << a.replicas;
    if (!a.order.empty()) out << ";order:" << KindList(a.order);
    if (a.command) out << ";command:" << Esc(*a.command);
    if (!a.trigger.empty()) out << ";trigger:" << Esc(a.trigger) << ";alarm:" << FormatDecimal(a.alarm);
    out << "\n";
  }
  out << "\n[placement]\nstrategy=" << cfg.placement_strategy << "\n";
  for (const auto& [role, hosts] : cfg.placement) out << role << "=" << JoinList(hosts) << "\n";
  out << "\n[experiment]\nk=" << cfg.k << "\n";
  if (!cfg.upgrade_target.empty()) out << "upgrade_target=" << Esc(cfg.upgrade_target) << "\n";
  if (!cfg.order_app.empty()) out << "order_app=" << Esc(cfg.order_app) << "\n";
  return out.str();
}

int ScaleOverlayNodes(int k) {
  const int vnfs = 2 * k;
  const int balancers = k >= 2 ? 2 : 0;
  const int switches = 2 * k + 1;
  return vnfs + balancers + switches;
}

ScenarioConfig GenScaleTopology(int k, const Costs& costs) {
  if (k < 1) throw Error(ErrorCode::kInvalidConfig, "k must be at least 1");
  ScenarioConfig cfg;
  cfg.name = "scale-k" + std::to_string(k);
  cfg.costs = costs;
  cfg.k = k;
  const int n = 2 * k + 1;
  for (int i = 1; i <= n; ++i) {
    cfg.switches.push_back("SW" + std::to_string(i));
    if (i > 1) cfg.links.emplace_back("SW" + std::to_string(i - 1), "SW" + std::to_string(i));
  }
  auto host = [&](const std::string& id, int sw) {
    DeviceConfig d;
    d.descriptor.id = id;
    d.descriptor.device_class = DeviceClass::kB;
    d.descriptor.props = {ProtocolKind::kHttpLike, InfoModelKind::kRaw};
    d.descriptor.capabilities.host_capacity = 1;
    d.switch_id = "SW" + std::to_string(sw);
    cfg.devices.push_back(std::move(d));
  };
  std::vector<std::string> da_hosts;
  std::vector<std::string> imc_hosts;
  for (int i = 1; i <= k; ++i) {
    da_hosts.push_back("h-da-" + std::to_string(i));
    host(da_hosts.back(), 1 + i);
  }
  for (int i = 1; i <= k; ++i) {
    imc_hosts.push_back("h-imc-" + std::to_string(i));
    host(imc_hosts.back(), k + 1 + i);
  }
  cfg.placement_strategy = "pinned";
  cfg.placement["DA1"] = da_hosts;
  cfg.placement["IMC1"] = imc_hosts;
  if (k >= 2) {
    host("h-lb-da", 2);
    host("h-lb-imc", k + 2);
    cfg.placement["LB1/DA1"] = {"h-lb-da"};
    cfg.placement["LB1/IMC1"] = {"h-lb-imc"};
  }
  DeviceConfig sensor;
  sensor.descriptor.id = "sound-1";
  sensor.descriptor.device_class = DeviceClass::kA;
  sensor.descriptor.props = {ProtocolKind::kHttpLike, InfoModelKind::kRaw};
  sensor.descriptor.proxy = cfg.fixed_node;
  sensor.switch_id = "SW" + std::to_string(n);
  sensor.quantity = "sound";
  sensor.unit = "dB";
  sensor.readings = {10, 20, 30, 40, 60};
  cfg.devices.push_back(std::move(sensor));

  AppConfig app;
  app.id = "scale-app";
  app.node = "app-node";
  app.requirements = {ProtocolKind::kHttpLike, InfoModelKind::kSenmlLike,
                      Aggregation::kThresholdData};
  app.threshold = 50;
  app.devices = {"sound-1"};
  app.replicas = k;
  cfg.apps.push_back(std::move(app));
  return cfg;
}

}  // namespace iotgw::sim
