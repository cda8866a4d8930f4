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

#include "iotgw/fabric/flow.h"

#include <algorithm>

namespace iotgw::fabric {

bool MatchPredicate::Empty() const {
  return !app_level_src && !app_level_dst && !chain_id && !app_requirements &&
         !device_props && !protocol;
}

bool MatchPredicate::Matches(const Envelope& env) const {
  if (app_level_src && *app_level_src != env.src()) return false;
  if (app_level_dst && *app_level_dst != env.dst()) return false;
  if (chain_id && env.chain_id() != chain_id) return false;
  if (app_requirements && env.app_requirements() != app_requirements) return false;
  if (device_props && env.device_props() != device_props) return false;
  if (protocol && env.protocol() != *protocol) return false;
  return true;
}

std::string MatchPredicate::ToString() const {
  std::vector<std::string> parts;
  if (app_requirements) {
    parts.push_back("Application: " + std::string(Name(app_requirements->protocol)) +
                    ", " + std::string(Name(app_requirements->info_model)) + ", " +
                    std::string(Name(app_requirements->aggregation)));
  }
  if (device_props) {
    parts.push_back("IoT: " + std::string(Name(device_props->info_model)) + ", " +
                    std::string(Name(device_props->protocol)));
  }
  if (chain_id) parts.push_back("Chain Id = " + *chain_id);
  if (app_level_src) parts.push_back("src = " + *app_level_src);
  if (app_level_dst) parts.push_back("dst = " + *app_level_dst);
  if (protocol) parts.push_back("protocol = " + std::string(Name(*protocol)));
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += " && ";
    out += p;
  }
  return out.empty() ? "*" : out;
}

std::string ToString(const Target& target) {
  struct Visitor {
    std::string operator()(const SwitchRef& t) const { return t.id; }
    std::string operator()(const VnfRef& t) const { return "vnf:" + t.instance_id; }
    std::string operator()(const DeviceRef& t) const { return "device:" + t.id; }
    std::string operator()(const AppAddr& t) const { return "app:" + t.addr; }
  };
  return std::visit(Visitor{}, target);
}

std::string ToString(const Action& action) {
  if (const auto* insert = std::get_if<InsertChainId>(&action)) {
    return "Insert Chain Id " + insert->chain_id;
  }
  return "Forward to " + ToString(std::get<ForwardTo>(action).target);
}

std::vector<std::string> ValidateEntry(const FlowEntry& entry) {
  std::vector<std::string> violations;
  if (entry.match.Empty()) violations.emplace_back("match has no constraint");
  if (entry.actions.empty()) violations.emplace_back("action list is empty");
  int inserts = 0;
  bool forwarded = false;
  for (const Action& action : entry.actions) {
    if (std::holds_alternative<InsertChainId>(action)) {
      ++inserts;
      if (forwarded) violations.emplace_back("InsertChainId after ForwardTo");
      if (std::get<InsertChainId>(action).chain_id.empty()) {
        violations.emplace_back("empty chain id");
      }
    } else {
      forwarded = true;
    }
  }
  if (inserts > 1) violations.emplace_back("more than one InsertChainId");
  return violations;
}

bool FlowTable::Insert(FlowEntry entry) {
  if (std::find(entries_.begin(), entries_.end(), entry) != entries_.end()) {
    return false;
  }
  auto pos = std::find_if(entries_.begin(), entries_.end(), [&](const FlowEntry& e) {
    return e.priority < entry.priority;
  });
  entries_.insert(pos, std::move(entry));
  return true;
}

std::size_t FlowTable::RemoveByCookie(const std::string& cookie) {
  return std::erase_if(entries_, [&](const FlowEntry& e) { return e.cookie == cookie; });
}

bool FlowTable::Remove(const FlowEntry& entry) {
  auto it = std::find(entries_.begin(), entries_.end(), entry);
  if (it == entries_.end()) return false;
  entries_.erase(it);
  return true;
}

const FlowEntry* MatchPacket(const FlowTable& table, const Envelope& env) {
  for (const FlowEntry& entry : table.entries()) {
    if (entry.match.Matches(env)) return &entry;
  }
  return nullptr;
}

}  // namespace iotgw::fabric
