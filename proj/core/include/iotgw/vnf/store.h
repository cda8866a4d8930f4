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

#ifndef IOTGW_VNF_STORE_H_
#define IOTGW_VNF_STORE_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iotgw/model/kinds.h"
#include "iotgw/model/vnf_kind.h"
#include "iotgw/vnf/feasibility.h"

namespace iotgw::vnf {

struct VnfPackage {
  VnfKind kind;
  std::string version = "1.0";
  std::map<std::string, std::string> metadata;

  friend bool operator==(const VnfPackage&, const VnfPackage&) = default;
};

// The Gateway Functions Store: every function the gateway provider can
// supply, keyed by (kind, version).
class GatewayFunctionsStore {
 public:
  explicit GatewayFunctionsStore(FeasibilityTable feasibility = {});

  // Throws kDuplicatePackage if (kind, version) is already on-boarded.
  void Onboard(VnfPackage package);
  // Drops every version of `kind`. Returns the number removed.
  std::size_t Remove(const VnfKind& kind);

  // Latest version (largest version string) of `kind`; throws
  // kFunctionUnavailable when absent or when an IMC/PC variant has no
  // declared conversion.
  const VnfPackage& Lookup(const VnfKind& kind) const;
  const VnfPackage& LookupImc(InfoModelKind from, InfoModelKind to) const;
  const VnfPackage& LookupPc(ProtocolKind from, ProtocolKind to) const;

  bool Contains(const VnfKind& kind) const;
  std::vector<VnfPackage> packages() const;
  const FeasibilityTable& feasibility() const { return feasibility_; }

 private:
  FeasibilityTable feasibility_;
  std::map<std::pair<VnfKind, std::string>, VnfPackage> packages_;
};

// Every kind named in the default feasibility table plus DA1 and LB1.
GatewayFunctionsStore DefaultStore();

}  // namespace iotgw::vnf

#endif  // IOTGW_VNF_STORE_H_
