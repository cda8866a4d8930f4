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

#include "iotgw/orchestrator/placement.h"

#include "iotgw/model/error.h"

namespace iotgw::orchestrator {

std::string RandomPlacement::Choose(const std::string& role, const ResourceView& view) {
  std::vector<const HostView*> eligible;
  for (const HostView& host : view.hosts) {
    if (host.free_slots > 0) eligible.push_back(&host);
  }
  if (eligible.empty()) throw Error(ErrorCode::kHostFull, "no free slot for " + role);
  return eligible[rng_() % eligible.size()]->device.id;
}

std::string PinnedPlacement::Choose(const std::string& role, const ResourceView& view) {
  auto pin = pins_.find(role);
  if (pin == pins_.end()) {
    if (fallback_) return fallback_->Choose(role, view);
    throw Error(ErrorCode::kHostFull, "no placement for " + role);
  }
  for (const std::string& wanted : pin->second) {
    for (const HostView& host : view.hosts) {
      if (host.device.id == wanted && host.free_slots > 0) return wanted;
    }
  }
  throw Error(ErrorCode::kHostFull, "every pinned host for " + role + " is full");
}

}  // namespace iotgw::orchestrator
