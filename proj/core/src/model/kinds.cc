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

#include "iotgw/model/kinds.h"

#include <array>
#include <utility>

namespace iotgw {
namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(const std::array<std::pair<std::string_view, Enum>, N>& table,
                           std::string_view text) {
  for (const auto& [name, value] : table) {
    if (name == text) return value;
  }
  return std::nullopt;
}

constexpr std::array<std::pair<std::string_view, ProtocolKind>, 3> kProtocols{{
    {"HttpLike", ProtocolKind::kHttpLike},
    {"CoapLike", ProtocolKind::kCoapLike},
    {"LcpLike", ProtocolKind::kLcpLike},
}};

constexpr std::array<std::pair<std::string_view, InfoModelKind>, 4> kModels{{
    {"Raw", InfoModelKind::kRaw},
    {"SenmlLike", InfoModelKind::kSenmlLike},
    {"SensormlLike", InfoModelKind::kSensormlLike},
    {"RobotCmd", InfoModelKind::kRobotCmd},
}};

constexpr std::array<std::pair<std::string_view, Aggregation>, 3> kAggregations{{
    {"None", Aggregation::kNone},
    {"AverageData", Aggregation::kAverageData},
    {"ThresholdData", Aggregation::kThresholdData},
}};

constexpr std::array<std::pair<std::string_view, DeviceClass>, 2> kClasses{{
    {"A", DeviceClass::kA},
    {"B", DeviceClass::kB},
}};

template <typename Enum, std::size_t N>
std::string_view NameOf(const std::array<std::pair<std::string_view, Enum>, N>& table,
                        Enum value) {
  for (const auto& [name, v] : table) {
    if (v == value) return name;
  }
  return "?";
}

}  // namespace

std::string_view Name(ProtocolKind kind) { return NameOf(kProtocols, kind); }
std::string_view Name(InfoModelKind kind) { return NameOf(kModels, kind); }
std::string_view Name(Aggregation kind) { return NameOf(kAggregations, kind); }
std::string_view Name(DeviceClass kind) { return NameOf(kClasses, kind); }

std::optional<ProtocolKind> ParseProtocol(std::string_view text) {
  return Lookup(kProtocols, text);
}
std::optional<InfoModelKind> ParseInfoModel(std::string_view text) {
  return Lookup(kModels, text);
}
std::optional<Aggregation> ParseAggregation(std::string_view text) {
  return Lookup(kAggregations, text);
}
std::optional<DeviceClass> ParseDeviceClass(std::string_view text) {
  return Lookup(kClasses, text);
}

}  // namespace iotgw
