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

#ifndef IOTGW_FABRIC_FABRIC_H_
#define IOTGW_FABRIC_FABRIC_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iotgw/fabric/flow.h"
#include "iotgw/model/envelope.h"

namespace iotgw::fabric {

// How a switch reaches the VNFs it detours through. The sim harness plugs the
// VNF runtime in here.
class VnfHopHandler {
 public:
  struct Result {
    std::optional<Envelope> envelope;  // nullopt: the VNF consumed the packet
    Ticks elapsed = 0;                 // round trip plus processing
  };

  virtual ~VnfHopHandler() = default;
  virtual bool IsLive(const std::string& instance_id) const = 0;
  virtual Result Invoke(const std::string& instance_id, const Envelope& env,
                        Ticks now) = 0;
  // Runs at the classifier once the chain id is pushed. A sensing request
  // comes back as the readings it asked for; nullopt forwards it unchanged.
  virtual std::optional<Result> Collect(const Envelope& /*request*/, Ticks /*now*/) {
    return std::nullopt;
  }
};

struct Emission {
  Target target;
  Envelope envelope;
  // Ticks spent inside the switch's action list (VNF detours) before this
  // emission left the switch.
  Ticks offset = 0;
};

// One hop of the switch trace, printed as `tick,switch_id,chain_id,action`.
struct TraceLine {
  Ticks tick = 0;
  std::string switch_id;
  std::string chain_id;
  std::string action;

  std::string ToString() const;
  friend bool operator==(const TraceLine&, const TraceLine&) = default;
};

struct SwitchNode {
  std::string id;
  FlowTable table;
  std::set<Target> links;
};

// The application-level forwarding plane: switches, their links, and their
// flow tables. Table writes are accepted from one controller only.
class FlowFabric {
 public:
  void AddSwitch(const std::string& id);
  void Connect(const std::string& a, const std::string& b);
  void Attach(const std::string& switch_id, const Target& target);
  void Detach(const std::string& switch_id, const Target& target);

  // The ingress switch that also classifies flows.
  void SetClassifier(const std::string& switch_id);
  const std::string& classifier() const { return classifier_; }

  // Binds the single writer. The first writer to install claims ownership.
  void BindController(const std::string& controller_id);
  const std::string& owner() const { return owner_; }

  // `vnfs` is consulted to reject forwarding to terminated VNFs; it may be
  // null when no VNF targets are involved. Throws kUnknownSwitch,
  // kDanglingTarget, kInvalidArgument (malformed entry), kNotTableOwner.
  bool InstallEntry(const std::string& writer, const std::string& switch_id,
                    const FlowEntry& entry, const VnfHopHandler* vnfs = nullptr);
  bool RemoveEntry(const std::string& writer, const std::string& switch_id,
                   const FlowEntry& entry);
  std::size_t RemoveByCookie(const std::string& writer, const std::string& cookie);

  // Runs the matched entry's actions in order. Unmatched packets are dropped
  // and logged. VNF detours are synchronous: the switch hands the envelope to
  // the VNF and continues with what comes back.
  // Throws kUnknownSwitch, kChainIdOverwrite, kNoVnfAtHop.
  std::vector<Emission> ProcessPacket(const std::string& switch_id, Envelope env,
                                      VnfHopHandler* vnfs, Ticks now);

  // Chain id the classifier switch would stamp. Throws kUnclassifiableRequest.
  std::string Classify(const Envelope& env) const;

  bool HasSwitch(const std::string& id) const { return switches_.contains(id); }
  const SwitchNode& Switch(const std::string& id) const;
  std::vector<std::string> SwitchIds() const;
  // Switch-to-switch adjacency only.
  std::set<std::string> Neighbors(const std::string& id) const;
  // Switch a target is attached to.
  std::optional<std::string> AttachmentOf(const Target& target) const;

  std::map<std::string, FlowTable> Tables() const;
  std::size_t EntryCount() const;

  const std::vector<TraceLine>& trace() const { return trace_; }
  void ClearTrace() { trace_.clear(); }
  // Every accepted table write, as (writer, switch_id).
  const std::vector<std::pair<std::string, std::string>>& write_log() const {
    return write_log_;
  }

 private:
  SwitchNode& MutableSwitch(const std::string& id);
  void CheckWriter(const std::string& writer);

  std::map<std::string, SwitchNode> switches_;
  std::string classifier_;
  std::string owner_;
  std::vector<TraceLine> trace_;
  std::vector<std::pair<std::string, std::string>> write_log_;
};

}  // namespace iotgw::fabric

#endif  // IOTGW_FABRIC_FABRIC_H_
