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

#ifndef IOTGW_CONTROL_CONTROLLER_H_
#define IOTGW_CONTROL_CONTROLLER_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iotgw/fabric/fabric.h"
#include "iotgw/fabric/flow.h"
#include "iotgw/model/types.h"
#include "iotgw/model/vnf_kind.h"
#include "iotgw/vnf/manager.h"

namespace iotgw::control {

// What the northbound interface accepts: a chain, the traffic it applies to,
// and where the path starts and ends.
struct ChainRegistration {
  ChainSpec chain;
  fabric::MatchPredicate classification;
  std::string ingress;
  fabric::Target egress;
  // Pins a chain function to a specific instance. Unpinned kinds go through
  // the live load balancer fronting that kind, else the lowest-id instance.
  std::map<VnfKind, std::string> bindings;

  // Cookie carried by every entry this registration installs.
  std::string Key() const;

  friend bool operator==(const ChainRegistration&, const ChainRegistration&) = default;
};

struct TopologyView {
  std::map<std::string, std::set<std::string>> adjacency;
  // Live instances only.
  std::map<std::string, vnf::VnfInstance> instances;
  // Switch each attachable target hangs off.
  std::map<fabric::Target, std::string> attachments;
};

// Snapshot of the fabric's switch graph and the manager's live instances.
TopologyView Snapshot(const fabric::FlowFabric& fabric, const vnf::VnfManager& manager);

// Shortest hop path from `from` to `to`; among equal-length paths the one
// whose switch-id sequence is lexicographically smallest. Empty if none.
std::vector<std::string> ShortestPath(
    const std::map<std::string, std::set<std::string>>& adjacency,
    const std::string& from, const std::string& to);

struct CompiledChain {
  std::string cookie;
  // Switch visitation order from ingress to egress, one entry per switch.
  std::vector<std::pair<std::string, fabric::FlowEntry>> entries;
  // Instance visited for each chain function, in chain order.
  std::vector<std::string> vnf_path;

  std::map<std::string, std::vector<fabric::FlowEntry>> ByTable() const;
};

// Pure compilation against a snapshot. Throws kUnknownIngress, kMissingVnf,
// kNoPath.
CompiledChain CompileChain(const ChainRegistration& reg, const TopologyView& topo);

// The single logical writer of every switch table.
class SdnController {
 public:
  static constexpr const char* kDefaultId = "ctrl-0";

  SdnController(fabric::FlowFabric& fabric, const vnf::VnfManager& manager,
                std::string id = kDefaultId);

  // Compiles and pushes. Re-registering an identical registration is a no-op;
  // a changed one replaces the old entries.
  void RegisterChain(const ChainRegistration& reg);
  // Removes every entry of the registration with this key. Returns whether
  // it existed.
  bool UnregisterChain(const std::string& key);

  CompiledChain Compile(const ChainRegistration& reg) const;
  // Installs egress-first. On failure the entries already pushed are removed
  // and the error propagates.
  void PushEntries(const CompiledChain& compiled);

  const std::map<std::string, ChainRegistration>& registrations() const {
    return registrations_;
  }
  const std::string& id() const { return id_; }

 private:
  class Liveness : public fabric::VnfHopHandler {
   public:
    explicit Liveness(const vnf::VnfManager& manager) : manager_(manager) {}
    bool IsLive(const std::string& instance_id) const override;
    Result Invoke(const std::string& instance_id, const Envelope& env,
                  Ticks now) override;

   private:
    const vnf::VnfManager& manager_;
  };

  fabric::FlowFabric& fabric_;
  const vnf::VnfManager& manager_;
  std::string id_;
  Liveness liveness_;
  std::map<std::string, ChainRegistration> registrations_;
};

}  // namespace iotgw::control

#endif  // IOTGW_CONTROL_CONTROLLER_H_
