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

#ifndef IOTGW_SIM_SCENARIO_H_
#define IOTGW_SIM_SCENARIO_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iotgw/model/scheduler.h"
#include "iotgw/model/types.h"
#include "iotgw/model/vnf_kind.h"

namespace iotgw::sim {

struct DeviceConfig {
  DeviceDescriptor descriptor;
  // Switch the device is reachable from; for hosts, where their VNFs attach.
  std::string switch_id;
  std::string quantity;
  std::string unit;
  std::vector<double> readings;

  friend bool operator==(const DeviceConfig&, const DeviceConfig&) = default;
};

struct AppConfig {
  std::string id;
  std::string node;  // network node the application runs on
  AppRequirements requirements;
  std::vector<std::string> devices;
  double threshold = 0.0;
  int window = 1;
  Ticks start = 0;
  int retries = 0;
  std::vector<VnfKind> order;
  int replicas = 1;
  // Actuation apps send `command` ("/robots/r1/grab?target=ball") instead of
  // reading sensors. With a trigger they start when the trigger app first
  // receives a value above `alarm`.
  std::optional<std::string> command;
  std::string trigger;
  double alarm = 0.0;

  friend bool operator==(const AppConfig&, const AppConfig&) = default;
};

struct FeasibilityDecl {
  VnfKind kind;
  std::string from;
  std::string to;

  friend bool operator==(const FeasibilityDecl&, const FeasibilityDecl&) = default;
};

struct ScenarioConfig {
  std::string name = "scenario";
  std::uint64_t seed = 1;
  Costs costs;

  std::vector<std::string> switches;
  std::vector<std::pair<std::string, std::string>> links;
  std::string classifier = "SW1";
  std::string fixed_node = "fixed";
  // Switch -> node running it. Unlisted switches run on "node-<switch>",
  // the classifier on the fixed node.
  std::map<std::string, std::string> switch_hosts;

  std::vector<DeviceConfig> devices;

  bool default_store = true;
  std::map<VnfKind, std::string> store_packages;  // kind -> version
  std::set<VnfKind> store_exclude;

  bool default_feasibility = true;
  std::vector<FeasibilityDecl> feasibility;

  std::vector<AppConfig> apps;

  std::string placement_strategy = "random";
  std::map<std::string, std::vector<std::string>> placement;

  int k = 1;
  std::string upgrade_target;
  std::string order_app;

  std::string SwitchHost(const std::string& switch_id) const;
  const DeviceConfig* Device(const std::string& id) const;
  const AppConfig* App(const std::string& id) const;
  // Every broken invariant; empty means runnable.
  std::vector<std::string> Validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Line-oriented `key=value` text in [sections]; values are `;`-separated
// `field:value` lists using the envelope percent escapes. Throws
// kInvalidConfig naming the line.
ScenarioConfig ParseScenario(std::string_view text);
// Throws kIo when the file cannot be read.
ScenarioConfig LoadScenario(const std::string& path);
// Inverse of ParseScenario.
std::string FormatScenario(const ScenarioConfig& cfg);

// Linear chain of 2k+1 switches with k DA and k IMC hosts, one load
// balancer host per kind when k >= 2, and one sound sensor at the far end.
ScenarioConfig GenScaleTopology(int k, const Costs& costs = {});

// Nodes the generated gateway overlay will hold: 2k VNFs, the load
// balancers, and the switches (the classifier's on the fixed node).
int ScaleOverlayNodes(int k);

}  // namespace iotgw::sim

#endif  // IOTGW_SIM_SCENARIO_H_
