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

#include "iotgw/overlay/overlay.h"

#include <deque>

#include "iotgw/model/error.h"

namespace iotgw::overlay {

std::string_view Name(OverlayId id) {
  return id == OverlayId::kGateway ? "Gateway" : "Application";
}

OverlayId Other(OverlayId id) {
  return id == OverlayId::kGateway ? OverlayId::kApplication : OverlayId::kGateway;
}

void Manet::AddNode(const std::string& id) {
  if (id.empty()) throw Error(ErrorCode::kInvalidArgument, "empty node id");
  adjacency_.try_emplace(id);
}

void Manet::Link(const std::string& a, const std::string& b) {
  AddNode(a);
  AddNode(b);
  if (a == b) return;
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

std::optional<int> Manet::Hops(const std::string& from, const std::string& to) const {
  if (!HasNode(from) || !HasNode(to)) return std::nullopt;
  std::map<std::string, int> dist{{from, 0}};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    std::string node = queue.front();
    queue.pop_front();
    if (node == to) return dist[node];
    for (const std::string& next : adjacency_.at(node)) {
      if (dist.try_emplace(next, dist[node] + 1).second) queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::vector<std::string> Manet::nodes() const {
  std::vector<std::string> out;
  for (const auto& [id, links] : adjacency_) out.push_back(id);
  return out;
}

std::string OverlayEvent::ToString() const {
  return std::to_string(tick) + ',' + std::string(Name(overlay)) + ',' + event + ',' + node;
}

OverlayNetwork::OverlayNetwork(const Manet& manet, Ticks hop_delay, Ticks join_cost)
    : manet_(manet), hop_delay_(hop_delay), join_cost_(join_cost) {
  if (hop_delay < 0 || join_cost < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative overlay cost");
  }
}

void OverlayNetwork::Log(Ticks tick, OverlayId overlay, std::string event,
                         std::string node) {
  events_.push_back({tick, overlay, std::move(event), std::move(node)});
}

MasterProfile& OverlayNetwork::MutableProfile(OverlayId overlay) {
  auto it = profiles_.find(overlay);
  if (it == profiles_.end()) {
    throw Error(ErrorCode::kOverlayNotCreated, std::string(Name(overlay)));
  }
  return it->second;
}

const MasterProfile& OverlayNetwork::Profile(OverlayId overlay) const {
  auto it = profiles_.find(overlay);
  if (it == profiles_.end()) {
    throw Error(ErrorCode::kOverlayNotCreated, std::string(Name(overlay)));
  }
  return it->second;
}

void OverlayNetwork::Create(OverlayId overlay, const std::string& master, Ticks now) {
  if (Created(overlay)) throw Error(ErrorCode::kAlreadyCreated, std::string(Name(overlay)));
  if (!manet_.HasNode(master)) {
    throw Error(ErrorCode::kUnreachable, master + " is not in the network");
  }
  MasterProfile profile{master, "overlay://" + master + "/" + std::string(Name(overlay)),
                        {master}};
  profiles_.emplace(overlay, std::move(profile));
  OverlayNode& node = nodes_[master];
  node.id = master;
  node.memberships.insert(overlay);
  Log(now, overlay, "create", master);
}

Ticks OverlayNetwork::Join(const std::string& node, OverlayId overlay, Ticks now) {
  MasterProfile& profile = MutableProfile(overlay);
  if (profile.registry.contains(node)) return 0;
  if (!manet_.Reachable(node, profile.master)) {
    throw Error(ErrorCode::kUnreachable, node + " cannot reach " + profile.master);
  }
  profile.registry.insert(node);
  OverlayNode& entry = nodes_[node];
  entry.id = node;
  entry.memberships.insert(overlay);
  Log(now, overlay, "join", node);
  return join_cost_;
}

void OverlayNetwork::JoinViaProxy(const std::string& device, const std::string& proxy,
                                  OverlayId overlay, Ticks now) {
  const MasterProfile& profile = MutableProfile(overlay);
  if (!profile.registry.contains(proxy)) {
    throw Error(ErrorCode::kNotMember, proxy + " is not in " + std::string(Name(overlay)));
  }
  proxies_[{overlay, device}] = proxy;
  nodes_[proxy].represents.insert(device);
  Log(now, overlay, "represent", device + "@" + proxy);
}

void OverlayNetwork::Leave(const std::string& node, OverlayId overlay, Ticks now) {
  MasterProfile& profile = MutableProfile(overlay);
  if (!profile.registry.contains(node)) {
    throw Error(ErrorCode::kNotMember, node + " is not in " + std::string(Name(overlay)));
  }
  if (node == profile.master) throw Error(ErrorCode::kMasterLeft, node);
  profile.registry.erase(node);
  OverlayNode& entry = nodes_[node];
  entry.memberships.erase(overlay);
  std::erase_if(proxies_, [&](const auto& kv) {
    return kv.first.first == overlay && kv.second == node;
  });
  entry.represents.clear();
  for (const auto& [key, proxy] : proxies_) {
    if (proxy == node) entry.represents.insert(key.second);
  }
  Log(now, overlay, "leave", node);
}

bool OverlayNetwork::IsMember(const std::string& node, OverlayId overlay) const {
  auto it = profiles_.find(overlay);
  return it != profiles_.end() && it->second.registry.contains(node);
}

std::optional<std::string> OverlayNetwork::Resolve(const std::string& node,
                                                   OverlayId overlay) const {
  if (IsMember(node, overlay)) return node;
  auto it = proxies_.find({overlay, node});
  if (it != proxies_.end() && IsMember(it->second, overlay)) return it->second;
  return std::nullopt;
}

std::vector<std::string> OverlayNetwork::CoLocatedNodes() const {
  std::vector<std::string> out;
  for (const auto& [id, node] : nodes_) {
    if (IsMember(id, OverlayId::kGateway) && IsMember(id, OverlayId::kApplication)) {
      out.push_back(id);
    }
  }
  return out;
}

std::size_t OverlayNetwork::RegistrySize(OverlayId overlay) const {
  auto it = profiles_.find(overlay);
  return it == profiles_.end() ? 0 : it->second.registry.size();
}

Delivery OverlayNetwork::Route(OverlayMsg msg, Ticks now) {
  const std::string overlay_name(Name(msg.overlay));
  auto src = Resolve(msg.src, msg.overlay);
  if (!src) throw Error(ErrorCode::kNotMember, msg.src + " is not in " + overlay_name);
  auto dst = Resolve(msg.dst, msg.overlay);
  if (!dst) throw Error(ErrorCode::kNotMember, msg.dst + " is not in " + overlay_name);
  int hops = *src == *dst ? 0 : 1;
  std::string hop = overlay_name + ":" + msg.src + ">" + msg.dst;
  msg.trace.push_back(hop);
  msg.payload.AppendTrace("overlay|" + hop);
  Log(now, msg.overlay, "route", msg.src + ">" + msg.dst);
  return {std::move(msg), now + hops * hop_delay_, hops};
}

OverlayMsg OverlayNetwork::Bridge(OverlayMsg msg, const std::string& at, Ticks now) {
  if (!IsMember(at, OverlayId::kGateway) || !IsMember(at, OverlayId::kApplication)) {
    throw Error(ErrorCode::kNotCoLocated, at);
  }
  msg.overlay = Other(msg.overlay);
  msg.src = at;
  std::string hop = "bridge@" + at + ">" + std::string(Name(msg.overlay));
  msg.trace.push_back(hop);
  msg.payload.AppendTrace("overlay|" + hop);
  Log(now, msg.overlay, "bridge", at);
  return msg;
}

Delivery OverlayNetwork::CrossDeliver(OverlayMsg msg, OverlayId dst_overlay, Ticks now) {
  if (msg.overlay == dst_overlay) return Route(std::move(msg), now);
  if (!Resolve(msg.dst, dst_overlay)) {
    throw Error(ErrorCode::kNotMember,
                msg.dst + " is not in " + std::string(Name(dst_overlay)));
  }
  std::vector<std::string> bridges = CoLocatedNodes();
  if (bridges.empty()) {
    throw Error(ErrorCode::kNotMember, msg.dst + " unreachable: no co-located node");
  }
  const std::string final_dst = msg.dst;
  msg.dst = bridges.front();
  Delivery first = Route(std::move(msg), now);
  OverlayMsg bridged = Bridge(std::move(first.msg), bridges.front(), first.deliver_at);
  bridged.dst = final_dst;
  Delivery second = Route(std::move(bridged), first.deliver_at);
  second.hops += first.hops;
  return second;
}

void OverlayNetwork::CheckDeliverable(const OverlayMsg& msg) const {
  if (!Resolve(msg.dst, msg.overlay)) {
    throw Error(ErrorCode::kNotMember,
                msg.dst + " left " + std::string(Name(msg.overlay)) + " before delivery");
  }
}

}  // namespace iotgw::overlay
