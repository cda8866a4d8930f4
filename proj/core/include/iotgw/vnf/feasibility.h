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

#ifndef IOTGW_VNF_FEASIBILITY_H_
#define IOTGW_VNF_FEASIBILITY_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "iotgw/model/kinds.h"
#include "iotgw/model/vnf_kind.h"

namespace iotgw::vnf {

using ModelPair = std::pair<InfoModelKind, InfoModelKind>;
using ProtocolPair = std::pair<ProtocolKind, ProtocolKind>;

// Declares which conversions exist and which variant performs each. A pair
// that is not declared here is infeasible, and any function that would need
// it is never provisioned.
class FeasibilityTable {
 public:
  // IMC1..IMC5 and PC1..PC4; see the .cc for the full list.
  static FeasibilityTable Default();

  void DeclareImc(VnfKind kind, InfoModelKind from, InfoModelKind to);
  void DeclarePc(VnfKind kind, ProtocolKind from, ProtocolKind to);

  std::optional<ModelPair> ImcPair(const VnfKind& kind) const;
  std::optional<ProtocolPair> PcPair(const VnfKind& kind) const;

  std::optional<VnfKind> ImcFor(InfoModelKind from, InfoModelKind to) const;
  std::optional<VnfKind> PcFor(ProtocolKind from, ProtocolKind to) const;

  std::vector<std::pair<VnfKind, ModelPair>> imc_entries() const;
  std::vector<std::pair<VnfKind, ProtocolPair>> pc_entries() const;

 private:
  std::map<VnfKind, ModelPair> imc_;
  std::map<VnfKind, ProtocolPair> pc_;
};

}  // namespace iotgw::vnf

#endif  // IOTGW_VNF_FEASIBILITY_H_
