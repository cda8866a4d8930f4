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

#include "iotgw/vnf/store.h"

#include "iotgw/model/error.h"

namespace iotgw::vnf {

GatewayFunctionsStore::GatewayFunctionsStore(FeasibilityTable feasibility)
    : feasibility_(std::move(feasibility)) {}

void GatewayFunctionsStore::Onboard(VnfPackage package) {
  auto key = std::make_pair(package.kind, package.version);
  if (packages_.contains(key)) {
    throw Error(ErrorCode::kDuplicatePackage,
                package.kind.ToString() + " version " + package.version);
  }
  packages_.emplace(std::move(key), std::move(package));
}

std::size_t GatewayFunctionsStore::Remove(const VnfKind& kind) {
  return std::erase_if(packages_,
                       [&](const auto& entry) { return entry.first.first == kind; });
}

const VnfPackage& GatewayFunctionsStore::Lookup(const VnfKind& kind) const {
  if (kind.type == VnfType::kIMC && !feasibility_.ImcPair(kind)) {
    throw Error(ErrorCode::kFunctionUnavailable,
                kind.ToString() + " has no declared conversion");
  }
  if (kind.type == VnfType::kPC && !feasibility_.PcPair(kind)) {
    throw Error(ErrorCode::kFunctionUnavailable,
                kind.ToString() + " has no declared conversion");
  }
  const VnfPackage* latest = nullptr;
  for (const auto& [key, package] : packages_) {
    if (key.first == kind) latest = &package;  // map order: versions ascend
  }
  if (latest == nullptr) {
    throw Error(ErrorCode::kFunctionUnavailable,
                kind.ToString() + " is not in the gateway functions store");
  }
  return *latest;
}

const VnfPackage& GatewayFunctionsStore::LookupImc(InfoModelKind from,
                                                   InfoModelKind to) const {
  auto kind = feasibility_.ImcFor(from, to);
  if (!kind) {
    throw Error(ErrorCode::kFunctionUnavailable,
                "no converter from " + std::string(Name(from)) + " to " +
                    std::string(Name(to)));
  }
  return Lookup(*kind);
}

const VnfPackage& GatewayFunctionsStore::LookupPc(ProtocolKind from,
                                                  ProtocolKind to) const {
  auto kind = feasibility_.PcFor(from, to);
  if (!kind) {
    throw Error(ErrorCode::kFunctionUnavailable,
                "no converter from " + std::string(Name(from)) + " to " +
                    std::string(Name(to)));
  }
  return Lookup(*kind);
}

bool GatewayFunctionsStore::Contains(const VnfKind& kind) const {
  for (const auto& [key, package] : packages_) {
    if (key.first == kind) return true;
  }
  return false;
}

std::vector<VnfPackage> GatewayFunctionsStore::packages() const {
  std::vector<VnfPackage> out;
  for (const auto& [key, package] : packages_) out.push_back(package);
  return out;
}

GatewayFunctionsStore DefaultStore() {
  FeasibilityTable table = FeasibilityTable::Default();
  GatewayFunctionsStore store(table);
  store.Onboard({VnfKind{VnfType::kDA, 1}, "1.0", {{"function", "aggregate"}}});
  store.Onboard({VnfKind{VnfType::kLB, 1}, "1.0", {{"function", "balance"}}});
  for (const auto& [kind, pair] : table.imc_entries()) {
    store.Onboard({kind, "1.0",
                   {{"from", std::string(Name(pair.first))},
                    {"to", std::string(Name(pair.second))}}});
  }
  for (const auto& [kind, pair] : table.pc_entries()) {
    store.Onboard({kind, "1.0",
                   {{"from", std::string(Name(pair.first))},
                    {"to", std::string(Name(pair.second))}}});
  }
  return store;
}

}  // namespace iotgw::vnf
