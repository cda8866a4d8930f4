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

#ifndef IOTGW_MODEL_KINDS_H_
#define IOTGW_MODEL_KINDS_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace iotgw {

using Ticks = std::int64_t;

enum class ProtocolKind { kHttpLike, kCoapLike, kLcpLike };
enum class InfoModelKind { kRaw, kSenmlLike, kSensormlLike, kRobotCmd };
enum class Aggregation { kNone, kAverageData, kThresholdData };
enum class DeviceClass { kA, kB };

std::string_view Name(ProtocolKind kind);
std::string_view Name(InfoModelKind kind);
std::string_view Name(Aggregation kind);
std::string_view Name(DeviceClass kind);

// Parsers accept exactly the names produced by Name(); anything else is
// outside the closed set and yields nullopt.
std::optional<ProtocolKind> ParseProtocol(std::string_view text);
std::optional<InfoModelKind> ParseInfoModel(std::string_view text);
std::optional<Aggregation> ParseAggregation(std::string_view text);
std::optional<DeviceClass> ParseDeviceClass(std::string_view text);

}  // namespace iotgw

#endif  // IOTGW_MODEL_KINDS_H_
