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

#ifndef IOTGW_FABRIC_FLOW_H_
#define IOTGW_FABRIC_FLOW_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iotgw/model/envelope.h"

namespace iotgw::fabric {

// Exact-match constraints over application-layer header values. Unset fields
// are wildcards.
struct MatchPredicate {
  std::optional<std::string> app_level_src;
  std::optional<std::string> app_level_dst;
  std::optional<std::string> chain_id;
  std::optional<AppRequirements> app_requirements;
  std::optional<DeviceProps> device_props;
  std::optional<ProtocolKind> protocol;

  bool Empty() const;
  bool Matches(const Envelope& env) const;
  std::string ToString() const;

  friend bool operator==(const MatchPredicate&, const MatchPredicate&) = default;
};

struct SwitchRef {
  std::string id;
  friend auto operator<=>(const SwitchRef&, const SwitchRef&) = default;
};
struct VnfRef {
  std::string instance_id;
  friend auto operator<=>(const VnfRef&, const VnfRef&) = default;
};
struct DeviceRef {
  std::string id;
  friend auto operator<=>(const DeviceRef&, const DeviceRef&) = default;
};
struct AppAddr {
  std::string addr;
  friend auto operator<=>(const AppAddr&, const AppAddr&) = default;
};

using Target = std::variant<SwitchRef, VnfRef, DeviceRef, AppAddr>;

std::string ToString(const Target& target);

struct InsertChainId {
  std::string chain_id;
  friend bool operator==(const InsertChainId&, const InsertChainId&) = default;
};
struct ForwardTo {
  Target target;
  friend bool operator==(const ForwardTo&, const ForwardTo&) = default;
};

using Action = std::variant<InsertChainId, ForwardTo>;

std::string ToString(const Action& action);

struct FlowEntry {
  int priority = 0;
  MatchPredicate match;
  std::vector<Action> actions;
  // Opaque owner tag (the chain registration), used for bulk removal.
  std::string cookie;

  friend bool operator==(const FlowEntry&, const FlowEntry&) = default;
};

// Structural checks that do not need the topology: non-empty match and
// action list, at most one InsertChainId, and it precedes every ForwardTo.
std::vector<std::string> ValidateEntry(const FlowEntry& entry);

// Entries kept sorted by priority (descending), then insertion order.
class FlowTable {
 public:
  // Returns false (and changes nothing) if an identical entry is present.
  bool Insert(FlowEntry entry);
  // Removes entries with this cookie; returns how many.
  std::size_t RemoveByCookie(const std::string& cookie);
  bool Remove(const FlowEntry& entry);

  const std::vector<FlowEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const FlowTable&, const FlowTable&) = default;

 private:
  std::vector<FlowEntry> entries_;
};

// First entry (in table order) whose every set constraint holds, or nullptr.
const FlowEntry* MatchPacket(const FlowTable& table, const Envelope& env);

}  // namespace iotgw::fabric

#endif  // IOTGW_FABRIC_FLOW_H_
