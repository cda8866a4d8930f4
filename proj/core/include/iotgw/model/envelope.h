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

#ifndef IOTGW_MODEL_ENVELOPE_H_
#define IOTGW_MODEL_ENVELOPE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "iotgw/model/kinds.h"
#include "iotgw/model/types.h"

namespace iotgw {

namespace header {
inline constexpr std::string_view kSrc = "app_level_src";
inline constexpr std::string_view kDst = "app_level_dst";
inline constexpr std::string_view kChainId = "chain_id";
inline constexpr std::string_view kAppProtocol = "app_protocol";
inline constexpr std::string_view kAppInfoModel = "app_info_model";
inline constexpr std::string_view kAppAggregation = "app_aggregation";
inline constexpr std::string_view kDevProtocol = "dev_protocol";
inline constexpr std::string_view kDevInfoModel = "dev_info_model";
// Measurement metadata used to lift raw values into canonical records.
inline constexpr std::string_view kDeviceId = "device_id";
inline constexpr std::string_view kQuantity = "quantity";
inline constexpr std::string_view kUnit = "unit";
inline constexpr std::string_view kFirstTick = "t0";
}  // namespace header

struct RawValues {
  std::vector<double> values;
  friend bool operator==(const RawValues&, const RawValues&) = default;
};

struct Records {
  std::vector<CanonicalRecord> records;
  friend bool operator==(const Records&, const Records&) = default;
};

struct EncodedText {
  InfoModelKind model = InfoModelKind::kSenmlLike;
  std::string text;
  friend bool operator==(const EncodedText&, const EncodedText&) = default;
};

struct RobotCommand {
  std::string verb;
  std::vector<std::string> args;
  friend bool operator==(const RobotCommand&, const RobotCommand&) = default;
};

using Body = std::variant<RawValues, Records, EncodedText, RobotCommand>;

// Raw values and canonical records are both the Raw model; they differ only
// in whether measurement metadata travels with each value.
InfoModelKind ModelOf(const Body& body);

// The application-level packet. Addresses are always present, the chain id is
// write-once, and an LcpLike envelope only ever carries a robot command.
class Envelope {
 public:
  Envelope(ProtocolKind protocol, std::string src, std::string dst,
           Body body = RawValues{});

  ProtocolKind protocol() const { return protocol_; }
  void set_protocol(ProtocolKind protocol);

  const Body& body() const { return body_; }
  void set_body(Body body);

  const std::map<std::string, std::string, std::less<>>& headers() const {
    return headers_;
  }
  std::optional<std::string> Header(std::string_view key) const;

  // Sets an arbitrary header. Writing chain_id goes through StampChainId.
  void SetHeader(std::string_view key, std::string value);
  void EraseHeader(std::string_view key);

  const std::string& src() const;
  const std::string& dst() const;

  std::optional<std::string> chain_id() const { return Header(header::kChainId); }
  // Same-value restamps are accepted; a different value is kChainIdOverwrite.
  void StampChainId(std::string_view chain_id);

  void SetAppRequirements(const AppRequirements& req);
  std::optional<AppRequirements> app_requirements() const;
  void SetDeviceProps(const DeviceProps& props);
  std::optional<DeviceProps> device_props() const;

  const std::vector<std::string>& trace() const { return trace_; }
  void AppendTrace(std::string hop) { trace_.push_back(std::move(hop)); }

  friend bool operator==(const Envelope&, const Envelope&) = default;

 private:
  ProtocolKind protocol_;
  std::map<std::string, std::string, std::less<>> headers_;
  std::vector<std::string> trace_;
  Body body_;
};

bool IsValidHeaderKey(std::string_view key);

}  // namespace iotgw

#endif  // IOTGW_MODEL_ENVELOPE_H_
