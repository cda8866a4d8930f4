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

#include "iotgw/vnf/feasibility.h"

#include "iotgw/model/error.h"

namespace iotgw::vnf {

FeasibilityTable FeasibilityTable::Default() {
  using M = InfoModelKind;
  using P = ProtocolKind;
  FeasibilityTable t;
  t.DeclareImc({VnfType::kIMC, 1}, M::kRaw, M::kSenmlLike);
  t.DeclareImc({VnfType::kIMC, 2}, M::kRaw, M::kSensormlLike);
  t.DeclareImc({VnfType::kIMC, 3}, M::kSenmlLike, M::kRobotCmd);
  t.DeclareImc({VnfType::kIMC, 4}, M::kSenmlLike, M::kRaw);
  t.DeclareImc({VnfType::kIMC, 5}, M::kSensormlLike, M::kRaw);
  t.DeclarePc({VnfType::kPC, 1}, P::kCoapLike, P::kHttpLike);
  t.DeclarePc({VnfType::kPC, 2}, P::kHttpLike, P::kLcpLike);
  t.DeclarePc({VnfType::kPC, 3}, P::kHttpLike, P::kCoapLike);
  t.DeclarePc({VnfType::kPC, 4}, P::kLcpLike, P::kHttpLike);
  return t;
}

void FeasibilityTable::DeclareImc(VnfKind kind, InfoModelKind from,
                                  InfoModelKind to) {
  if (kind.type != VnfType::kIMC) {
    throw Error(ErrorCode::kInvalidArgument,
                kind.ToString() + " is not an information model converter");
  }
  if (from == to) {
    throw Error(ErrorCode::kInvalidArgument, "identity conversions are implicit");
  }
  auto [it, inserted] = imc_.try_emplace(kind, from, to);
  if (!inserted && it->second != ModelPair{from, to}) {
    throw Error(ErrorCode::kInvalidArgument,
                kind.ToString() + " already declares a different conversion");
  }
}

void FeasibilityTable::DeclarePc(VnfKind kind, ProtocolKind from, ProtocolKind to) {
  if (kind.type != VnfType::kPC) {
    throw Error(ErrorCode::kInvalidArgument,
                kind.ToString() + " is not a protocol converter");
  }
  if (from == to) {
    throw Error(ErrorCode::kInvalidArgument, "identity conversions are implicit");
  }
  auto [it, inserted] = pc_.try_emplace(kind, from, to);
  if (!inserted && it->second != ProtocolPair{from, to}) {
    throw Error(ErrorCode::kInvalidArgument,
                kind.ToString() + " already declares a different conversion");
  }
}

std::optional<ModelPair> FeasibilityTable::ImcPair(const VnfKind& kind) const {
  auto it = imc_.find(kind);
  if (it == imc_.end()) return std::nullopt;
  return it->second;
}

std::optional<ProtocolPair> FeasibilityTable::PcPair(const VnfKind& kind) const {
  auto it = pc_.find(kind);
  if (it == pc_.end()) return std::nullopt;
  return it->second;
}

std::optional<VnfKind> FeasibilityTable::ImcFor(InfoModelKind from,
                                                InfoModelKind to) const {
  for (const auto& [kind, pair] : imc_) {
    if (pair == ModelPair{from, to}) return kind;
  }
  return std::nullopt;
}

std::optional<VnfKind> FeasibilityTable::PcFor(ProtocolKind from,
                                               ProtocolKind to) const {
  for (const auto& [kind, pair] : pc_) {
    if (pair == ProtocolPair{from, to}) return kind;
  }
  return std::nullopt;
}

std::vector<std::pair<VnfKind, ModelPair>> FeasibilityTable::imc_entries() const {
  return {imc_.begin(), imc_.end()};
}

std::vector<std::pair<VnfKind, ProtocolPair>> FeasibilityTable::pc_entries() const {
  return {pc_.begin(), pc_.end()};
}

}  // namespace iotgw::vnf
