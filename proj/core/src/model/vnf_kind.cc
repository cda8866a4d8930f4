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

#include "iotgw/model/vnf_kind.h"

#include <charconv>

namespace iotgw {

std::string_view Name(VnfType type) {
  switch (type) {
    case VnfType::kDA: return "DA";
    case VnfType::kIMC: return "IMC";
    case VnfType::kPC: return "PC";
    case VnfType::kLB: return "LB";
  }
  return "?";
}

std::string VnfKind::ToString() const {
  return std::string(Name(type)) + std::to_string(variant);
}

std::optional<VnfKind> VnfKind::Parse(std::string_view text) {
  for (VnfType t : {VnfType::kIMC, VnfType::kDA, VnfType::kPC, VnfType::kLB}) {
    std::string_view prefix = Name(t);
    if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix) {
      continue;
    }
    std::string_view digits = text.substr(prefix.size());
    int variant = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), variant);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        variant < 1 || digits.front() == '0') {
      return std::nullopt;
    }
    return VnfKind{t, variant};
  }
  return std::nullopt;
}

}  // namespace iotgw
