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

#include "iotgw/control/controller.h"

#include <deque>

#include "iotgw/model/error.h"

namespace iotgw::control {

using fabric::FlowEntry;
using fabric::ForwardTo;
using fabric::InsertChainId;
using fabric::MatchPredicate;

std::string ChainRegistration::Key() const {
  std::string key = "chain:" + chain.chain_id;
  if (classification.app_level_dst) key += "@" + *classification.app_level_dst;
  return key;
}

TopologyView Snapshot(const fabric::FlowFabric& fabric, const vnf::VnfManager& manager) {
  TopologyView view;
  for (const std::string& id : fabric.SwitchIds()) {
    view.adjacency[id] = fabric.Neighbors(id);
    for (const fabric::Target& target : fabric.Switch(id).links) {
      if (!std::holds_alternative<fabric::SwitchRef>(target)) {
        view.attachments.try_emplace(target, id);
      }
    }
  }
  for (const vnf::VnfInstance& instance : manager.catalogue().All()) {
    view.instances.emplace(instance.instance_id, instance);
  }
  return view;
}

std::vector<std::string> ShortestPath(
    const std::map<std::string, std::set<std::string>>& adjacency,
    const std::string& from, const std::string& to) {
  if (!adjacency.contains(from) || !adjacency.contains(to)) return {};
  // Distances to `to`, then a greedy walk that always takes the smallest
  // neighbour one step closer.
  std::map<std::string, int> dist{{to, 0}};
  std::deque<std::string> queue{to};
  while (!queue.empty()) {
    std::string node = queue.front();
    queue.pop_front();
    auto it = adjacency.find(node);
    if (it == adjacency.end()) continue;
    for (const std::string& next : it->second) {
      if (dist.try_emplace(next, dist[node] + 1).second) queue.push_back(next);
    }
  }
  if (!dist.contains(from)) return {};
  std::vector<std::string> path{from};
  while (path.back() != to) {
    int here = dist[path.back()];
    for (const std::string& next : adjacency.at(path.back())) {
      auto d = dist.find(next);
      if (d != dist.end() && d->second == here - 1) {
        path.push_back(next);
        break;
      }
    }
  }
  return path;
}

std::map<std::string, std::vector<FlowEntry>> CompiledChain::ByTable() const {
  std::map<std::string, std::vector<FlowEntry>> out;
  for (const auto& [sw, entry] : entries) out[sw].push_back(entry);
  return out;
}

namespace {

std::string ResolveInstance(const ChainRegistration& reg, const TopologyView& topo,
                            const VnfKind& kind) {
  if (auto pin = reg.bindings.find(kind); pin != reg.bindings.end()) {
    auto it = topo.instances.find(pin->second);
    const auto* lb = it == topo.instances.end()
                         ? nullptr
                         : std::get_if<vnf::LbConfig>(&it->second.config);
    bool fronts = lb != nullptr && lb->group_kind == kind;
    if (it == topo.instances.end() || (it->second.kind != kind && !fronts)) {
      throw Error(ErrorCode::kMissingVnf,
                  kind.ToString() + " (bound instance " + pin->second + " is not live)");
    }
    return pin->second;
  }
  for (const auto& [id, instance] : topo.instances) {
    const auto* lb = std::get_if<vnf::LbConfig>(&instance.config);
    if (instance.kind.type == VnfType::kLB && lb != nullptr && lb->group_kind == kind) {
      return id;
    }
  }
  for (const auto& [id, instance] : topo.instances) {
    if (instance.kind == kind) return id;
  }
  throw Error(ErrorCode::kMissingVnf, kind.ToString());
}

struct Visit {
  std::string switch_id;
  std::vector<std::string> vnfs;
};

}  // namespace

CompiledChain CompileChain(const ChainRegistration& reg, const TopologyView& topo) {
  if (!topo.adjacency.contains(reg.ingress)) {
    throw Error(ErrorCode::kUnknownIngress, reg.ingress);
  }
  if (reg.chain.chain_id.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "registration without chain id");
  }
  if (reg.classification.Empty()) {
    throw Error(ErrorCode::kInvalidArgument, "registration without classification");
  }

  CompiledChain out;
  out.cookie = reg.Key();
  std::vector<Visit> visits{{reg.ingress, {}}};
  auto walk_to = [&](const std::string& target) {
    std::vector<std::string> path = ShortestPath(topo.adjacency, visits.back().switch_id, target);
    if (path.empty()) {
      throw Error(ErrorCode::kNoPath, visits.back().switch_id + " to " + target);
    }
    for (std::size_t i = 1; i < path.size(); ++i) visits.push_back({path[i], {}});
  };

  for (const VnfKind& kind : reg.chain.functions) {
    std::string instance = ResolveInstance(reg, topo, kind);
    auto at = topo.attachments.find(fabric::VnfRef{instance});
    if (at == topo.attachments.end()) {
      throw Error(ErrorCode::kNoPath, instance + " is not attached to any switch");
    }
    walk_to(at->second);
    visits.back().vnfs.push_back(instance);
    out.vnf_path.push_back(instance);
  }
  auto egress = topo.attachments.find(reg.egress);
  if (egress == topo.attachments.end()) {
    throw Error(ErrorCode::kNoPath, fabric::ToString(reg.egress) + " is not attached");
  }
  walk_to(egress->second);

  // Downstream entries match on the chain id alone, so a switch can appear
  // only once on the path.
  std::set<std::string> seen;
  for (const Visit& visit : visits) {
    if (!seen.insert(visit.switch_id).second) {
      throw Error(ErrorCode::kNoPath, "path revisits " + visit.switch_id);
    }
  }

  for (std::size_t i = 0; i < visits.size(); ++i) {
    FlowEntry entry;
    entry.cookie = out.cookie;
    if (i == 0) {
      entry.match = reg.classification;
      entry.actions.emplace_back(InsertChainId{reg.chain.chain_id});
    } else {
      entry.match.chain_id = reg.chain.chain_id;
      entry.match.app_level_dst = reg.classification.app_level_dst;
    }
    for (const std::string& vnf : visits[i].vnfs) {
      entry.actions.emplace_back(ForwardTo{fabric::VnfRef{vnf}});
    }
    if (i + 1 < visits.size()) {
      entry.actions.emplace_back(ForwardTo{fabric::SwitchRef{visits[i + 1].switch_id}});
    } else {
      entry.actions.emplace_back(ForwardTo{reg.egress});
    }
    out.entries.emplace_back(visits[i].switch_id, std::move(entry));
  }
  return out;
}

bool SdnController::Liveness::IsLive(const std::string& instance_id) const {
  return manager_.IsLive(instance_id);
}

fabric::VnfHopHandler::Result SdnController::Liveness::Invoke(const std::string& instance_id,
                                                              const Envelope&, Ticks) {
  throw Error(ErrorCode::kInvalidArgument,
              "controller does not process packets (" + instance_id + ")");
}

SdnController::SdnController(fabric::FlowFabric& fabric, const vnf::VnfManager& manager,
                             std::string id)
    : fabric_(fabric), manager_(manager), id_(std::move(id)), liveness_(manager) {
  fabric_.BindController(id_);
}

CompiledChain SdnController::Compile(const ChainRegistration& reg) const {
  return CompileChain(reg, Snapshot(fabric_, manager_));
}

void SdnController::PushEntries(const CompiledChain& compiled) {
  std::vector<std::pair<std::string, FlowEntry>> pushed;
  try {
    for (auto it = compiled.entries.rbegin(); it != compiled.entries.rend(); ++it) {
      if (fabric_.InstallEntry(id_, it->first, it->second, &liveness_)) {
        pushed.push_back(*it);
      }
    }
  } catch (...) {
    for (const auto& [sw, entry] : pushed) fabric_.RemoveEntry(id_, sw, entry);
    throw;
  }
}

void SdnController::RegisterChain(const ChainRegistration& reg) {
  const std::string key = reg.Key();
  auto existing = registrations_.find(key);
  if (existing != registrations_.end() && existing->second == reg) return;

  CompiledChain compiled = Compile(reg);
  if (existing != registrations_.end()) fabric_.RemoveByCookie(id_, key);
  try {
    PushEntries(compiled);
  } catch (...) {
    if (existing != registrations_.end()) {
      registrations_.erase(existing);
    }
    throw;
  }
  registrations_.insert_or_assign(key, reg);
}

bool SdnController::UnregisterChain(const std::string& key) {
  auto it = registrations_.find(key);
  if (it == registrations_.end()) return false;
  fabric_.RemoveByCookie(id_, key);
  registrations_.erase(it);
  return true;
}

}  // namespace iotgw::control
