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

#include "iotgw/vnf/runtime.h"

#include "iotgw/model/error.h"
#include "iotgw/vnf/functions.h"

namespace iotgw::vnf {
namespace {

std::size_t CountRecords(const Body& body, const RecordContext& ctx) {
  if (std::holds_alternative<RobotCommand>(body)) return 1;
  if (const auto* text = std::get_if<EncodedText>(&body)) {
    if (text->model == InfoModelKind::kRobotCmd) return 1;
    if (text->model == InfoModelKind::kSenmlLike && !text->text.empty()) {
      // Robot requests are SenML-like too but carry no "v"; count them as one.
      try {
        return RecordsOf(body, ctx).size();
      } catch (const Error&) {
        return 1;
      }
    }
  }
  return RecordsOf(body, ctx).size();
}

// Keeps the protocol's content-format header in step with the body's model.
void SyncContentFormat(Envelope& env) {
  static constexpr std::pair<InfoModelKind, std::size_t> kRowForModel[] = {
      {InfoModelKind::kRaw, 0},
      {InfoModelKind::kSensormlLike, 1},
      {InfoModelKind::kSenmlLike, 3},
      {InfoModelKind::kRobotCmd, 4},
  };
  const InfoModelKind model = ModelOf(env.body());
  std::size_t row_index = 0;
  for (const auto& [m, idx] : kRowForModel) {
    if (m == model) row_index = idx;
  }
  const HeaderMappingRow& row = ContentFormatTable()[row_index];
  switch (env.protocol()) {
    case ProtocolKind::kCoapLike:
      if (env.Header(kCoapContentFormat) && !row.coap.empty()) {
        env.SetHeader(kCoapContentFormat, std::string(row.coap));
      }
      break;
    case ProtocolKind::kHttpLike:
      if (env.Header(kHttpContentType)) {
        env.SetHeader(kHttpContentType, std::string(row.http));
      }
      break;
    case ProtocolKind::kLcpLike:
      break;
  }
}

}  // namespace

VnfOutput VnfRuntime::Invoke(const std::string& instance_id, const Envelope& env) {
  auto instance = manager_.Instance(instance_id);
  if (!instance || instance->state == VnfState::kTerminated) {
    throw Error(ErrorCode::kNoVnfAtHop, instance_id + " is not running");
  }
  return Apply(*instance, env);
}

std::size_t VnfRuntime::Invocations(const std::string& instance_id) const {
  auto it = invocations_.find(instance_id);
  return it == invocations_.end() ? 0 : it->second;
}

VnfOutput VnfRuntime::Apply(const VnfInstance& instance, const Envelope& env) {
  const RecordContext ctx = ContextFromHeaders(env);
  VnfOutput out;
  switch (instance.kind.type) {
    case VnfType::kDA: {
      if (std::holds_alternative<RobotCommand>(env.body())) {
        out.envelope = env;
        break;
      }
      const auto* config = std::get_if<DaConfig>(&instance.config);
      DaConfig effective = config ? *config : DaConfig{};
      auto records = RecordsOf(env.body(), ctx);
      out.records = records.size();
      auto kept = DaProcess(records, effective);
      if (kept.empty()) break;
      Envelope next = env;
      next.set_body(EncodeAs(ModelOf(env.body()), kept));
      out.envelope = std::move(next);
      break;
    }
    case VnfType::kIMC: {
      auto pair = table_.ImcPair(instance.kind);
      if (const auto* configured = std::get_if<ModelPair>(&instance.config)) {
        pair = *configured;
      }
      if (!pair) {
        throw Error(ErrorCode::kInfeasibleConversion,
                    instance.kind.ToString() + " has no declared conversion");
      }
      const InfoModelKind source = ModelOf(env.body());
      if (source != pair->first) {
        throw Error(ErrorCode::kInfeasibleConversion,
                    instance.instance_id + " converts from " +
                        std::string(Name(pair->first)) + ", got " +
                        std::string(Name(source)));
      }
      out.records = CountRecords(env.body(), ctx);
      Envelope next = env;
      next.set_body(ImcConvert(env.body(), pair->second, table_, ctx));
      SyncContentFormat(next);
      out.envelope = std::move(next);
      break;
    }
    case VnfType::kPC: {
      auto pair = table_.PcPair(instance.kind);
      if (const auto* configured = std::get_if<ProtocolPair>(&instance.config)) {
        pair = *configured;
      }
      if (!pair) {
        throw Error(ErrorCode::kInfeasibleConversion,
                    instance.kind.ToString() + " has no declared conversion");
      }
      if (env.protocol() != pair->first) {
        throw Error(ErrorCode::kInfeasibleConversion,
                    instance.instance_id + " converts from " +
                        std::string(Name(pair->first)) + ", got " +
                        std::string(Name(env.protocol())));
      }
      out.records = CountRecords(env.body(), ctx);
      out.envelope = PcConvert(env, pair->second, table_);
      break;
    }
    case VnfType::kLB: {
      const auto* config = std::get_if<LbConfig>(&instance.config);
      std::vector<VnfInstance> group;
      if (config != nullptr) {
        for (const std::string& member : config->members) {
          if (auto m = manager_.Instance(member);
              m && m->state != VnfState::kTerminated) {
            group.push_back(*m);
          }
        }
      }
      std::string chosen = LbSelect(group, lb_seq_[instance.instance_id]++);
      VnfOutput inner = Invoke(chosen, env);
      out = std::move(inner);
      out.delegated_to.insert(out.delegated_to.begin(), chosen);
      invocations_[instance.instance_id] += 1;
      return out;
    }
  }
  invocations_[instance.instance_id] += out.records;
  return out;
}

}  // namespace iotgw::vnf
