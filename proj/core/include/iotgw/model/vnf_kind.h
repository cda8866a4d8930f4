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

#ifndef IOTGW_MODEL_VNF_KIND_H_
#define IOTGW_MODEL_VNF_KIND_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace iotgw {

enum class VnfType { kDA, kIMC, kPC, kLB };

std::string_view Name(VnfType type);

// A gateway function kind plus its variant index, printed as e.g. "IMC2".
// Which conversion a variant performs is decided by the feasibility table,
// not by the number itself.
struct VnfKind {
  VnfType type = VnfType::kDA;
  int variant = 1;

  std::string ToString() const;
  static std::optional<VnfKind> Parse(std::string_view text);

  friend auto operator<=>(const VnfKind&, const VnfKind&) = default;
};

}  // namespace iotgw

#endif  // IOTGW_MODEL_VNF_KIND_H_
