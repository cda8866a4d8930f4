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

#ifndef IOTGW_VNF_RUNTIME_H_
#define IOTGW_VNF_RUNTIME_H_

#include <map>
#include <optional>
#include <string>

#include "iotgw/model/envelope.h"
#include "iotgw/vnf/feasibility.h"
#include "iotgw/vnf/manager.h"

namespace iotgw::vnf {

struct VnfOutput {
  // Empty when the function consumed the envelope (e.g. the aggregator
  // filtered out every record).
  std::optional<Envelope> envelope;
  // Records handled across this invocation, including those handled by a
  // load balancer's selected member. Drives the simulated processing cost.
  std::size_t records = 0;
  // Members an LB forwarded to (zero or one).
  std::vector<std::string> delegated_to;
};

// Executes live VNF instances on envelopes and keeps per-instance invocation
// counts (records processed).
class VnfRuntime {
 public:
  VnfRuntime(const VnfManager& manager, const FeasibilityTable& table)
      : manager_(manager), table_(table) {}

  // Throws kNoVnfAtHop if the instance is unknown or terminated.
  VnfOutput Invoke(const std::string& instance_id, const Envelope& env);

  std::size_t Invocations(const std::string& instance_id) const;
  const std::map<std::string, std::size_t>& invocations() const {
    return invocations_;
  }

 private:
  VnfOutput Apply(const VnfInstance& instance, const Envelope& env);

  const VnfManager& manager_;
  const FeasibilityTable& table_;
  std::map<std::string, std::size_t> invocations_;
  std::map<std::string, std::uint64_t> lb_seq_;
};

}  // namespace iotgw::vnf

#endif  // IOTGW_VNF_RUNTIME_H_
