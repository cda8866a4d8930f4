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

#ifndef IOTGW_VNF_INSTANCE_H_
#define IOTGW_VNF_INSTANCE_H_

#include <string>
#include <variant>
#include <vector>

#include "iotgw/model/vnf_kind.h"
#include "iotgw/vnf/feasibility.h"

namespace iotgw::vnf {

enum class DaMode { kThreshold, kAverage };

struct DaConfig {
  DaMode mode = DaMode::kThreshold;
  double threshold = 0.0;  // kThreshold: keep records strictly above this.
  int window = 1;          // kAverage: records per averaged output.

  friend bool operator==(const DaConfig&, const DaConfig&) = default;
};

struct LbConfig {
  VnfKind group_kind;
  std::vector<std::string> members;

  friend bool operator==(const LbConfig&, const LbConfig&) = default;
};

using VnfConfig =
    std::variant<std::monostate, DaConfig, LbConfig, ModelPair, ProtocolPair>;

enum class VnfState { kInstantiated, kActive, kTerminated };

std::string_view Name(VnfState state);

struct VnfInstance {
  std::string instance_id;
  VnfKind kind;
  std::string host;
  VnfState state = VnfState::kInstantiated;
  VnfConfig config;

  friend bool operator==(const VnfInstance&, const VnfInstance&) = default;
};

}  // namespace iotgw::vnf

#endif  // IOTGW_VNF_INSTANCE_H_
