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

#ifndef IOTGW_OVERLAY_OVERLAY_H_
#define IOTGW_OVERLAY_OVERLAY_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "iotgw/model/envelope.h"
#include "iotgw/model/kinds.h"

namespace iotgw::overlay {

enum class OverlayId { kGateway, kApplication };

std::string_view Name(OverlayId id);
OverlayId Other(OverlayId id);

// The ad hoc network underneath both overlays: a static undirected graph.
class Manet {
 public:
  void AddNode(const std::string& id);
  // Adds both endpoints if needed.
  void Link(const std::string& a, const std::string& b);
  bool HasNode(const std::string& id) const { return adjacency_.contains(id); }
  // Hop count, or nullopt when unreachable or unknown.
  std::optional<int> Hops(const std::string& from, const std::string& to) const;
  bool Reachable(const std::string& from, const std::string& to) const {
    return Hops(from, to).has_value();
  }
  std::vector<std::string> nodes() const;
  std::size_t size() const { return adjacency_.size(); }

 private:
  std::map<std::string, std::set<std::string>> adjacency_;
};

struct MasterProfile {
  std::string master;
  std::string address;
  std::set<std::string> registry;
};

struct OverlayNode {
  std::string id;
  std::set<OverlayId> memberships;
  // Type-A devices this node stands in for, per overlay membership.
  std::set<std::string> represents;
};

struct OverlayMsg {
  OverlayId overlay = OverlayId::kGateway;
  std::string src;
  std::string dst;
  Envelope payload;
  std::vector<std::string> trace;
};

struct Delivery {
  OverlayMsg msg;
  Ticks deliver_at = 0;
  int hops = 0;
};

// One overlay event, printed as `tick,overlay,event,node`.
struct OverlayEvent {
  Ticks tick = 0;
  OverlayId overlay = OverlayId::kGateway;
  std::string event;
  std::string node;

  std::string ToString() const;
  friend bool operator==(const OverlayEvent&, const OverlayEvent&) = default;
};

// Both overlays with master-held membership. Routing is direct addressing
// over the membership the master knows: one logical hop per message.
class OverlayNetwork {
 public:
  OverlayNetwork(const Manet& manet, Ticks hop_delay, Ticks join_cost);

  // Throws kAlreadyCreated, kUnreachable (master not in the network).
  void Create(OverlayId overlay, const std::string& master, Ticks now);
  bool Created(OverlayId overlay) const { return profiles_.contains(overlay); }

  // Returns the simulated cost of the join: join_cost for a new member, 0
  // for an existing one. Throws kOverlayNotCreated, kUnreachable.
  Ticks Join(const std::string& node, OverlayId overlay, Ticks now);
  // A type-A device rides on a member that represents it; the registry is
  // unchanged. Throws kOverlayNotCreated, kNotMember (proxy).
  void JoinViaProxy(const std::string& device, const std::string& proxy,
                    OverlayId overlay, Ticks now);
  // Throws kNotMember, kMasterLeft.
  void Leave(const std::string& node, OverlayId overlay, Ticks now);

  // Throws kNotMember for src or dst. Type-A devices are reached through the
  // member that represents them.
  Delivery Route(OverlayMsg msg, Ticks now);
  // Re-emits into the other overlay from a co-located node. Throws
  // kNotCoLocated.
  OverlayMsg Bridge(OverlayMsg msg, const std::string& at, Ticks now);
  // Hands the message over at the first co-located node. Throws kNotMember
  // when no co-located node exists.
  Delivery CrossDeliver(OverlayMsg msg, OverlayId dst_overlay, Ticks now);
  // For messages already in flight: throws kNotMember if dst has left.
  void CheckDeliverable(const OverlayMsg& msg) const;

  bool IsMember(const std::string& node, OverlayId overlay) const;
  // Member node standing for `node` (itself or its proxy), if any.
  std::optional<std::string> Resolve(const std::string& node, OverlayId overlay) const;
  std::vector<std::string> CoLocatedNodes() const;
  const MasterProfile& Profile(OverlayId overlay) const;
  std::size_t RegistrySize(OverlayId overlay) const;
  const std::map<std::string, OverlayNode>& nodes() const { return nodes_; }
  const std::vector<OverlayEvent>& events() const { return events_; }

  Ticks hop_delay() const { return hop_delay_; }
  Ticks join_cost() const { return join_cost_; }

 private:
  MasterProfile& MutableProfile(OverlayId overlay);
  void Log(Ticks tick, OverlayId overlay, std::string event, std::string node);

  const Manet& manet_;
  Ticks hop_delay_;
  Ticks join_cost_;
  std::map<OverlayId, MasterProfile> profiles_;
  std::map<std::string, OverlayNode> nodes_;
  // (overlay, device) -> representing member.
  std::map<std::pair<OverlayId, std::string>, std::string> proxies_;
  std::vector<OverlayEvent> events_;
};

}  // namespace iotgw::overlay

#endif  // IOTGW_OVERLAY_OVERLAY_H_
