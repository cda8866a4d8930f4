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

#ifndef IOTGW_MODEL_TYPES_H_
#define IOTGW_MODEL_TYPES_H_

#include <optional>
#include <string>
#include <vector>

#include "iotgw/model/kinds.h"
#include "iotgw/model/vnf_kind.h"

namespace iotgw {

// Internal normal form for a single measurement. Every information-model
// encoding converts to and from a list of these.
struct CanonicalRecord {
  std::string device_id;
  std::string quantity;
  std::string unit;
  double value = 0.0;
  Ticks timestamp = 0;

  friend bool operator==(const CanonicalRecord&,
                         const CanonicalRecord&) = default;
};

struct AppRequirements {
  ProtocolKind protocol = ProtocolKind::kHttpLike;
  InfoModelKind info_model = InfoModelKind::kSenmlLike;
  Aggregation aggregation = Aggregation::kNone;

  friend bool operator==(const AppRequirements&,
                         const AppRequirements&) = default;
  friend auto operator<=>(const AppRequirements&,
                          const AppRequirements&) = default;
};

struct DeviceProps {
  ProtocolKind protocol = ProtocolKind::kCoapLike;
  InfoModelKind info_model = InfoModelKind::kRaw;

  friend bool operator==(const DeviceProps&, const DeviceProps&) = default;
  friend auto operator<=>(const DeviceProps&, const DeviceProps&) = default;
};

struct Location {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Location&, const Location&) = default;
};

struct Capabilities {
  int energy_pct = 100;
  Location location;
  Ticks response_time = 0;
  int host_capacity = 0;

  friend bool operator==(const Capabilities&, const Capabilities&) = default;
};

struct DeviceDescriptor {
  std::string id;
  DeviceClass device_class = DeviceClass::kB;
  DeviceProps props;
  Capabilities capabilities;
  // Type-B device that represents this one; required iff class A.
  std::optional<std::string> proxy;

  friend bool operator==(const DeviceDescriptor&,
                         const DeviceDescriptor&) = default;
};

// Returns every broken invariant; an empty list means the descriptor is valid.
std::vector<std::string> ValidateDescriptor(const DeviceDescriptor& d);

struct ChainSpec {
  std::string chain_id;
  std::vector<VnfKind> functions;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

// Empty chains and duplicate kinds are representable (the VNF agent can
// legitimately produce an empty decomposition); consumers that need a
// runnable chain check this.
std::vector<std::string> ValidateChain(const ChainSpec& chain);

std::string FunctionList(const std::vector<VnfKind>& functions);

}  // namespace iotgw

#endif  // IOTGW_MODEL_TYPES_H_
