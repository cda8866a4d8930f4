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

#include "iotgw/vnf/functions.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "iotgw/model/codec.h"
#include "iotgw/model/error.h"
#include "json.hpp"

namespace iotgw::vnf {
namespace {

using nlohmann::json;

[[noreturn]] void Infeasible(const std::string& why) {
  throw Error(ErrorCode::kInfeasibleConversion, why);
}

std::string XmlEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string XmlUnescape(std::string_view text) {
  static constexpr std::pair<std::string_view, char> kEntities[] = {
      {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}};
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    bool matched = false;
    if (text[i] == '&') {
      for (const auto& [entity, c] : kEntities) {
        if (text.substr(i, entity.size()) == entity) {
          out += c;
          i += entity.size();
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw Error(ErrorCode::kInvalidArgument, "unknown XML entity");
      }
      continue;
    }
    out += text[i++];
  }
  return out;
}

[[noreturn]] void BadText(std::string_view what) {
  throw Error(ErrorCode::kInvalidArgument, std::string(what));
}

}  // namespace

std::vector<CanonicalRecord> DaProcess(std::span<const CanonicalRecord> records,
                                       const DaConfig& config) {
  std::vector<CanonicalRecord> out;
  if (config.mode == DaMode::kThreshold) {
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [&](const CanonicalRecord& r) { return r.value > config.threshold; });
    return out;
  }
  if (config.window < 1) {
    throw Error(ErrorCode::kInvalidArgument, "aggregation window must be >= 1");
  }
  const auto window = static_cast<std::size_t>(config.window);
  for (std::size_t start = 0; start < records.size(); start += window) {
    std::size_t end = std::min(records.size(), start + window);
    double sum = 0.0;
    for (std::size_t i = start; i < end; ++i) sum += records[i].value;
    CanonicalRecord avg = records[end - 1];
    avg.value = sum / static_cast<double>(end - start);
    out.push_back(std::move(avg));
  }
  return out;
}

RecordContext ContextFromHeaders(const Envelope& env) {
  RecordContext ctx;
  ctx.device_id = env.Header(header::kDeviceId).value_or(env.src());
  ctx.quantity = env.Header(header::kQuantity).value_or("");
  ctx.unit = env.Header(header::kUnit).value_or("");
  if (auto t0 = env.Header(header::kFirstTick)) {
    Ticks parsed = 0;
    auto [ptr, ec] = std::from_chars(t0->data(), t0->data() + t0->size(), parsed);
    if (ec == std::errc() && ptr == t0->data() + t0->size()) ctx.first_tick = parsed;
  }
  return ctx;
}

std::vector<CanonicalRecord> Lift(const RawValues& raw, const RecordContext& ctx) {
  std::vector<CanonicalRecord> out;
  out.reserve(raw.values.size());
  for (std::size_t i = 0; i < raw.values.size(); ++i) {
    out.push_back({ctx.device_id, ctx.quantity, ctx.unit, raw.values[i],
                   ctx.first_tick + static_cast<Ticks>(i)});
  }
  return out;
}

std::string EncodeSenml(std::span<const CanonicalRecord> records) {
  json pack = json::array();
  for (const CanonicalRecord& r : records) {
    if (!std::isfinite(r.value)) {
      throw Error(ErrorCode::kInvalidArgument, "SenML values must be finite");
    }
    pack.push_back(
        {{"bn", r.device_id}, {"n", r.quantity}, {"u", r.unit}, {"v", r.value}, {"t", r.timestamp}});
  }
  return pack.dump();
}

std::vector<CanonicalRecord> DecodeSenml(std::string_view text) {
  json pack = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (!pack.is_array()) BadText("SenML-like text must be a JSON array");
  std::vector<CanonicalRecord> out;
  for (const json& item : pack) {
    if (!item.is_object()) BadText("SenML-like record must be an object");
    auto bn = item.find("bn");
    auto v = item.find("v");
    if (bn == item.end() || !bn->is_string()) BadText("SenML-like record needs bn");
    if (v == item.end() || !v->is_number()) BadText("SenML-like record needs v");
    CanonicalRecord r;
    r.device_id = bn->get<std::string>();
    r.value = v->get<double>();
    if (auto n = item.find("n"); n != item.end() && n->is_string()) {
      r.quantity = n->get<std::string>();
    }
    if (auto u = item.find("u"); u != item.end() && u->is_string()) {
      r.unit = u->get<std::string>();
    }
    if (auto t = item.find("t"); t != item.end() && t->is_number_integer()) {
      r.timestamp = t->get<Ticks>();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string EncodeSensorml(std::span<const CanonicalRecord> records) {
  std::string out;
  for (const CanonicalRecord& r : records) {
    if (!out.empty()) out += '\n';
    out += "<Observation device=\"" + XmlEscape(r.device_id) + "\" quantity=\"" +
           XmlEscape(r.quantity) + "\" uom=\"" + XmlEscape(r.unit) + "\" time=\"" +
           std::to_string(r.timestamp) + "\">" + FormatDecimal(r.value) +
           "</Observation>";
  }
  return out;
}

std::vector<CanonicalRecord> DecodeSensorml(std::string_view text) {
  static constexpr std::string_view kOpen = "<Observation ";
  static constexpr std::string_view kClose = "</Observation>";
  std::vector<CanonicalRecord> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && (text[pos] == '\n' || text[pos] == ' ')) ++pos;
    if (pos == text.size()) break;
    if (text.substr(pos, kOpen.size()) != kOpen) BadText("expected <Observation");
    pos += kOpen.size();
    CanonicalRecord r;
    bool have_time = false;
    while (true) {
      while (pos < text.size() && text[pos] == ' ') ++pos;
      if (pos >= text.size()) BadText("unterminated Observation tag");
      if (text[pos] == '>') {
        ++pos;
        break;
      }
      std::size_t eq = text.find("=\"", pos);
      if (eq == std::string_view::npos) BadText("bad Observation attribute");
      std::string_view name = text.substr(pos, eq - pos);
      std::size_t end = text.find('"', eq + 2);
      if (end == std::string_view::npos) BadText("unterminated attribute");
      std::string value = XmlUnescape(text.substr(eq + 2, end - eq - 2));
      if (name == "device") {
        r.device_id = std::move(value);
      } else if (name == "quantity") {
        r.quantity = std::move(value);
      } else if (name == "uom") {
        r.unit = std::move(value);
      } else if (name == "time") {
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(),
                                         r.timestamp);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
          BadText("bad Observation time");
        }
        have_time = true;
      } else {
        BadText("unknown Observation attribute");
      }
      pos = end + 1;
    }
    std::size_t close = text.find(kClose, pos);
    if (close == std::string_view::npos) BadText("missing </Observation>");
    if (!ParseDecimal(text.substr(pos, close - pos), r.value)) {
      BadText("bad Observation value");
    }
    if (!have_time) BadText("Observation needs a time");
    out.push_back(std::move(r));
    pos = close + kClose.size();
  }
  return out;
}

std::vector<CanonicalRecord> RecordsOf(const Body& body, const RecordContext& ctx) {
  if (const auto* raw = std::get_if<RawValues>(&body)) return Lift(*raw, ctx);
  if (const auto* recs = std::get_if<Records>(&body)) return recs->records;
  if (const auto* text = std::get_if<EncodedText>(&body)) {
    switch (text->model) {
      case InfoModelKind::kSenmlLike: return DecodeSenml(text->text);
      case InfoModelKind::kSensormlLike: return DecodeSensorml(text->text);
      default: break;
    }
    Infeasible("no measurement records in " + std::string(Name(text->model)) +
               " text");
  }
  Infeasible("robot commands carry no measurement records");
}

Body EncodeAs(InfoModelKind model, std::span<const CanonicalRecord> records) {
  switch (model) {
    case InfoModelKind::kRaw:
      return Records{{records.begin(), records.end()}};
    case InfoModelKind::kSenmlLike:
      return EncodedText{model, EncodeSenml(records)};
    case InfoModelKind::kSensormlLike:
      return EncodedText{model, EncodeSensorml(records)};
    case InfoModelKind::kRobotCmd:
      break;
  }
  Infeasible("measurement records cannot be expressed as robot commands");
}

EncodedText RobotRequest(std::string_view path, std::string_view query) {
  json pack = json::array();
  pack.push_back({{"bn", std::string(path)}, {"vs", std::string(query)}});
  return EncodedText{InfoModelKind::kSenmlLike, pack.dump()};
}

namespace {

RobotCommand CommandFromRequest(const EncodedText& request) {
  json pack = json::parse(request.text, nullptr, false);
  if (!pack.is_array() || pack.size() != 1 || !pack[0].is_object()) {
    Infeasible("robot request must be a single SenML-like actuation record");
  }
  const json& item = pack[0];
  auto bn = item.find("bn");
  if (bn == item.end() || !bn->is_string()) Infeasible("robot request needs bn");
  std::string path = bn->get<std::string>();
  std::string query;
  if (auto vs = item.find("vs"); vs != item.end() && vs->is_string()) {
    query = vs->get<std::string>();
  }
  std::size_t slash = path.find_last_of('/');
  std::string verb = slash == std::string::npos ? path : path.substr(slash + 1);
  if (std::find(std::begin(kRobotVerbs), std::end(kRobotVerbs), verb) ==
      std::end(kRobotVerbs)) {
    Infeasible("unknown robot verb '" + verb + "'");
  }
  RobotCommand cmd{verb, {}};
  std::size_t start = 0;
  while (start <= query.size()) {
    std::size_t amp = query.find('&', start);
    std::size_t end = amp == std::string::npos ? query.size() : amp;
    if (end > start) cmd.args.push_back(query.substr(start, end - start));
    if (amp == std::string::npos) break;
    start = amp + 1;
  }
  return cmd;
}

EncodedText RequestFromCommand(const RobotCommand& cmd) {
  std::string query;
  for (const std::string& arg : cmd.args) {
    if (!query.empty()) query += '&';
    query += arg;
  }
  return RobotRequest("/" + cmd.verb, query);
}

}  // namespace

Body ImcConvert(const Body& body, InfoModelKind target,
                const FeasibilityTable& table, const RecordContext& ctx) {
  const InfoModelKind source = ModelOf(body);
  if (source == target) return body;
  if (!table.ImcFor(source, target)) {
    Infeasible(std::string(Name(source)) + " -> " + std::string(Name(target)) +
               " is not a declared conversion");
  }
  if (target == InfoModelKind::kRobotCmd) {
    const auto* request = std::get_if<EncodedText>(&body);
    if (request == nullptr || request->model != InfoModelKind::kSenmlLike) {
      Infeasible("robot commands are built from SenML-like requests only");
    }
    return CommandFromRequest(*request);
  }
  if (const auto* cmd = std::get_if<RobotCommand>(&body)) {
    if (target != InfoModelKind::kSenmlLike) {
      Infeasible("robot commands map back to SenML-like requests only");
    }
    return RequestFromCommand(*cmd);
  }
  auto records = RecordsOf(body, ctx);
  return EncodeAs(target, records);
}

namespace {

constexpr HeaderMappingRow kContentFormats[] = {
    {"0", "text/plain;charset=utf-8", ""},
    {"41", "application/xml", ""},
    {"50", "application/json", ""},
    {"110", "application/senml+json", ""},
    {"", "application/x-robot-command", "DIRECT_COMMAND"},
};

constexpr HeaderMappingRow kMethods[] = {
    {"GET", "GET", "REPLY"},
    {"POST", "POST", "NOREPLY"},
    {"PUT", "PUT", ""},
    {"DELETE", "DELETE", ""},
};

std::string_view Column(const HeaderMappingRow& row, ProtocolKind p) {
  switch (p) {
    case ProtocolKind::kCoapLike: return row.coap;
    case ProtocolKind::kHttpLike: return row.http;
    case ProtocolKind::kLcpLike: return row.lcp;
  }
  return {};
}

void Rekey(Envelope& env, std::span<const HeaderMappingRow> table,
           const HeaderMappingRow& keys, ProtocolKind from, ProtocolKind to) {
  std::string_view from_key = Column(keys, from);
  std::string_view to_key = Column(keys, to);
  auto value = env.Header(from_key);
  if (!value) return;
  for (const HeaderMappingRow& row : table) {
    if (Column(row, from) == *value && !Column(row, from).empty()) {
      std::string_view mapped = Column(row, to);
      if (mapped.empty()) break;
      env.EraseHeader(from_key);
      env.SetHeader(to_key, std::string(mapped));
      return;
    }
  }
  Infeasible(std::string(from_key) + "=" + *value + " has no " +
             std::string(Name(to)) + " equivalent");
}

}  // namespace

std::span<const HeaderMappingRow> ContentFormatTable() { return kContentFormats; }
std::span<const HeaderMappingRow> MethodTable() { return kMethods; }

Envelope PcConvert(const Envelope& env, ProtocolKind target,
                   const FeasibilityTable& table) {
  const ProtocolKind source = env.protocol();
  if (source == target) return env;
  if (!table.PcFor(source, target)) {
    Infeasible(std::string(Name(source)) + " -> " + std::string(Name(target)) +
               " is not a declared conversion");
  }
  if (target == ProtocolKind::kLcpLike &&
      !std::holds_alternative<RobotCommand>(env.body())) {
    Infeasible("only robot commands can be carried over LcpLike");
  }
  Envelope out = env;
  static constexpr HeaderMappingRow kFormatKeys{kCoapContentFormat, kHttpContentType,
                                                kLcpPayload};
  static constexpr HeaderMappingRow kMethodKeys{kCoapMethod, kHttpMethod, kLcpReply};
  Rekey(out, kContentFormats, kFormatKeys, source, target);
  Rekey(out, kMethods, kMethodKeys, source, target);
  out.set_protocol(target);
  return out;
}

std::string LbSelect(std::span<const VnfInstance> group, std::uint64_t seq) {
  if (group.empty()) throw Error(ErrorCode::kEmptyGroup, "load balancer group is empty");
  for (const VnfInstance& member : group) {
    if (member.kind != group.front().kind) {
      throw Error(ErrorCode::kInvalidArgument, "load balancer group mixes kinds");
    }
  }
  return group[seq % group.size()].instance_id;
}

}  // namespace iotgw::vnf
