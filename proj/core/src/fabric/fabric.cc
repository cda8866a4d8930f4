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

#include "iotgw/fabric/fabric.h"

#include "iotgw/model/error.h"

namespace iotgw::fabric {

std::string TraceLine::ToString() const {
  return std::to_string(tick) + ',' + switch_id + ',' + chain_id + ',' + action;
}

void FlowFabric::AddSwitch(const std::string& id) {
  if (id.empty()) throw Error(ErrorCode::kInvalidArgument, "empty switch id");
  switches_.try_emplace(id, SwitchNode{id, {}, {}});
}

SwitchNode& FlowFabric::MutableSwitch(const std::string& id) {
  auto it = switches_.find(id);
  if (it == switches_.end()) throw Error(ErrorCode::kUnknownSwitch, id);
  return it->second;
}

const SwitchNode& FlowFabric::Switch(const std::string& id) const {
  auto it = switches_.find(id);
  if (it == switches_.end()) throw Error(ErrorCode::kUnknownSwitch, id);
  return it->second;
}

void FlowFabric::Connect(const std::string& a, const std::string& b) {
  SwitchNode& sa = MutableSwitch(a);
  SwitchNode& sb = MutableSwitch(b);
  if (a == b) return;
  sa.links.insert(SwitchRef{b});
  sb.links.insert(SwitchRef{a});
}

void FlowFabric::Attach(const std::string& switch_id, const Target& target) {
  MutableSwitch(switch_id).links.insert(target);
}

void FlowFabric::Detach(const std::string& switch_id, const Target& target) {
  MutableSwitch(switch_id).links.erase(target);
}

void FlowFabric::SetClassifier(const std::string& switch_id) {
  MutableSwitch(switch_id);
  classifier_ = switch_id;
}

void FlowFabric::BindController(const std::string& controller_id) {
  if (!owner_.empty() && owner_ != controller_id) {
    throw Error(ErrorCode::kNotTableOwner,
                "tables already owned by " + owner_ + ", refusing " + controller_id);
  }
  owner_ = controller_id;
}

void FlowFabric::CheckWriter(const std::string& writer) {
  if (owner_.empty()) owner_ = writer;
  if (writer != owner_) {
    throw Error(ErrorCode::kNotTableOwner, writer + " is not " + owner_);
  }
}

bool FlowFabric::InstallEntry(const std::string& writer, const std::string& switch_id,
                              const FlowEntry& entry, const VnfHopHandler* vnfs) {
  SwitchNode& sw = MutableSwitch(switch_id);
  CheckWriter(writer);
  if (auto violations = ValidateEntry(entry); !violations.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "flow entry for " + switch_id + ": " + violations.front());
  }
  for (const Action& action : entry.actions) {
    const auto* forward = std::get_if<ForwardTo>(&action);
    if (forward == nullptr) continue;
    if (!sw.links.contains(forward->target)) {
      throw Error(ErrorCode::kDanglingTarget,
                  ToString(forward->target) + " is not linked to " + switch_id);
    }
    if (const auto* vnf = std::get_if<VnfRef>(&forward->target);
        vnf != nullptr && vnfs != nullptr && !vnfs->IsLive(vnf->instance_id)) {
      throw Error(ErrorCode::kDanglingTarget, vnf->instance_id + " is not running");
    }
  }
  bool inserted = sw.table.Insert(entry);
  if (inserted) write_log_.emplace_back(writer, switch_id);
  return inserted;
}

bool FlowFabric::RemoveEntry(const std::string& writer, const std::string& switch_id,
                             const FlowEntry& entry) {
  SwitchNode& sw = MutableSwitch(switch_id);
  CheckWriter(writer);
  bool removed = sw.table.Remove(entry);
  if (removed) write_log_.emplace_back(writer, switch_id);
  return removed;
}

std::size_t FlowFabric::RemoveByCookie(const std::string& writer,
                                       const std::string& cookie) {
  CheckWriter(writer);
  std::size_t removed = 0;
  for (auto& [id, sw] : switches_) {
    std::size_t n = sw.table.RemoveByCookie(cookie);
    if (n > 0) write_log_.emplace_back(writer, id);
    removed += n;
  }
  return removed;
}

std::vector<Emission> FlowFabric::ProcessPacket(const std::string& switch_id,
                                                Envelope env, VnfHopHandler* vnfs,
                                                Ticks now) {
  const SwitchNode& sw = Switch(switch_id);
  std::vector<Emission> out;
  auto log = [&](Ticks tick, const std::string& action) {
    trace_.push_back({tick, switch_id, env.chain_id().value_or(""), action});
    env.AppendTrace(switch_id + "|" + action);
  };

  const FlowEntry* entry = MatchPacket(sw.table, env);
  if (entry == nullptr) {
    log(now, "drop:no-match");
    return out;
  }
  const std::vector<Action> actions = entry->actions;
  Ticks offset = 0;
  for (const Action& action : actions) {
    if (const auto* insert = std::get_if<InsertChainId>(&action)) {
      env.StampChainId(insert->chain_id);
      log(now + offset, "classify:" + insert->chain_id);
      if (vnfs == nullptr || switch_id != classifier_) continue;
      if (std::optional<VnfHopHandler::Result> collected = vnfs->Collect(env, now + offset)) {
        offset += collected->elapsed;
        if (!collected->envelope) return out;
        env = std::move(*collected->envelope);
      }
      continue;
    }
    const Target& target = std::get<ForwardTo>(action).target;
    if (const auto* vnf = std::get_if<VnfRef>(&target)) {
      if (vnfs == nullptr || !vnfs->IsLive(vnf->instance_id)) {
        throw Error(ErrorCode::kNoVnfAtHop,
                    vnf->instance_id + " at " + switch_id + " is not running");
      }
      VnfHopHandler::Result result = vnfs->Invoke(vnf->instance_id, env, now + offset);
      offset += result.elapsed;
      if (!result.envelope) {
        log(now + offset, "consumed:" + vnf->instance_id);
        return out;
      }
      env = std::move(*result.envelope);
      log(now + offset, "vnf:" + vnf->instance_id);
      continue;
    }
    log(now + offset, "forward:" + ToString(target));
    out.push_back({target, env, offset});
  }
  return out;
}

std::string FlowFabric::Classify(const Envelope& env) const {
  if (!env.app_requirements() || !env.device_props()) {
    throw Error(ErrorCode::kUnclassifiableRequest,
                "request lacks application requirements or device properties");
  }
  if (classifier_.empty()) {
    throw Error(ErrorCode::kUnclassifiableRequest, "no classifier switch");
  }
  for (const FlowEntry& entry : Switch(classifier_).table.entries()) {
    if (entry.actions.empty()) continue;
    const auto* insert = std::get_if<InsertChainId>(&entry.actions.front());
    if (insert != nullptr && entry.match.Matches(env)) return insert->chain_id;
  }
  throw Error(ErrorCode::kUnclassifiableRequest, "no classification entry matches");
}

std::vector<std::string> FlowFabric::SwitchIds() const {
  std::vector<std::string> out;
  for (const auto& [id, sw] : switches_) out.push_back(id);
  return out;
}

std::set<std::string> FlowFabric::Neighbors(const std::string& id) const {
  std::set<std::string> out;
  for (const Target& t : Switch(id).links) {
    if (const auto* s = std::get_if<SwitchRef>(&t)) out.insert(s->id);
  }
  return out;
}

std::optional<std::string> FlowFabric::AttachmentOf(const Target& target) const {
  for (const auto& [id, sw] : switches_) {
    if (sw.links.contains(target)) return id;
  }
  return std::nullopt;
}

std::map<std::string, FlowTable> FlowFabric::Tables() const {
  std::map<std::string, FlowTable> out;
  for (const auto& [id, sw] : switches_) out.emplace(id, sw.table);
  return out;
}

std::size_t FlowFabric::EntryCount() const {
  std::size_t n = 0;
  for (const auto& [id, sw] : switches_) n += sw.table.size();
  return n;
}

}  // namespace iotgw::fabric
