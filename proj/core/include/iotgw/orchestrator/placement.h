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

#ifndef IOTGW_ORCHESTRATOR_PLACEMENT_H_
#define IOTGW_ORCHESTRATOR_PLACEMENT_H_

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "iotgw/model/types.h"

namespace iotgw::orchestrator {

struct HostView {
  DeviceDescriptor device;
  int free_slots = 0;

  friend bool operator==(const HostView&, const HostView&) = default;
};

// The capable (class-B) devices as last discovered, ordered by id.
struct ResourceView {
  std::vector<HostView> hosts;
};

// Picks the host for one new instance. `role` is the function kind ("DA1"),
// or "LB1/DA1" for the load balancer fronting a DA1 group. `view` already
// reflects the slots taken by earlier picks in the same plan.
class PlacementStrategy {
 public:
  virtual ~PlacementStrategy() = default;
  // Throws kHostFull when no host has a free slot.
  virtual std::string Choose(const std::string& role, const ResourceView& view) = 0;
};

// Uniform over hosts with a free slot, from a seeded generator.
class RandomPlacement : public PlacementStrategy {
 public:
  explicit RandomPlacement(std::uint64_t seed) : rng_(seed) {}
  std::string Choose(const std::string& role, const ResourceView& view) override;

 private:
  std::mt19937_64 rng_;
};

// Per-role host preference lists; the first listed host with a free slot
// wins. Roles without a list fall back to `fallback` when given.
class PinnedPlacement : public PlacementStrategy {
 public:
  PinnedPlacement(std::map<std::string, std::vector<std::string>> pins,
                  std::unique_ptr<PlacementStrategy> fallback = nullptr)
      : pins_(std::move(pins)), fallback_(std::move(fallback)) {}
  std::string Choose(const std::string& role, const ResourceView& view) override;

 private:
  std::map<std::string, std::vector<std::string>> pins_;
  std::unique_ptr<PlacementStrategy> fallback_;
};

}  // namespace iotgw::orchestrator

#endif  // IOTGW_ORCHESTRATOR_PLACEMENT_H_
