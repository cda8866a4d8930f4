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

#include "iotgw/model/types.h"

#include <set>

namespace iotgw {

std::vector<std::string> ValidateDescriptor(const DeviceDescriptor& d) {
  std::vector<std::string> violations;
  if (d.id.empty()) violations.emplace_back("device id must be non-empty");
  const Capabilities& caps = d.capabilities;
  if (caps.energy_pct < 0 || caps.energy_pct > 100) {
    violations.emplace_back("energy must be within 0..100");
  }
  if (caps.response_time < 0) {
    violations.emplace_back("response time must be non-negative");
  }
  if (caps.host_capacity < 0) {
    violations.emplace_back("host capacity must be non-negative");
  }
  if (d.device_class == DeviceClass::kA) {
    if (caps.host_capacity != 0) {
      violations.emplace_back("A must have capacity 0");
    }
    if (!d.proxy.has_value() || d.proxy->empty()) {
      violations.emplace_back("A must have proxy");
    }
  } else if (d.proxy.has_value()) {
    violations.emplace_back("B must not have proxy");
  }
  if (d.proxy.has_value() && *d.proxy == d.id) {
    violations.emplace_back("device cannot proxy itself");
  }
  return violations;
}

std::vector<std::string> ValidateChain(const ChainSpec& chain) {
  std::vector<std::string> violations;
  if (chain.chain_id.empty()) violations.emplace_back("chain id must be non-empty");
  if (chain.functions.empty()) violations.emplace_back("chain must be non-empty");
  std::set<VnfKind> seen;
  for (const VnfKind& kind : chain.functions) {
    if (!seen.insert(kind).second) {
      violations.push_back("duplicate function " + kind.ToString());
    }
  }
  return violations;
}

std::string FunctionList(const std::vector<VnfKind>& functions) {
  std::string out;
  for (const VnfKind& kind : functions) {
    if (!out.empty()) out += ',';
    out += kind.ToString();
  }
  return out;
}

}  // namespace iotgw
