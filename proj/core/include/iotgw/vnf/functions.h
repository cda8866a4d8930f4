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

#ifndef IOTGW_VNF_FUNCTIONS_H_
#define IOTGW_VNF_FUNCTIONS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iotgw/model/envelope.h"
#include "iotgw/vnf/feasibility.h"
#include "iotgw/vnf/instance.h"

namespace iotgw::vnf {

// Data aggregation over canonical records.
//   kThreshold: records with value > threshold, order preserved.
//   kAverage:   one record per `window` consecutive inputs (the last window
//               may be short); value is the mean, everything else is copied
//               from the window's last record.
std::vector<CanonicalRecord> DaProcess(std::span<const CanonicalRecord> records,
                                       const DaConfig& config);

// Metadata for lifting bare raw values into canonical records. Value i gets
// timestamp first_tick + i.
struct RecordContext {
  std::string device_id;
  std::string quantity;
  std::string unit;
  Ticks first_tick = 0;
};

RecordContext ContextFromHeaders(const Envelope& env);
std::vector<CanonicalRecord> Lift(const RawValues& raw, const RecordContext& ctx);

// SenML-like: a JSON array with one object per record carrying
// "bn" (device id), "n" (quantity), "u" (unit), "v" (value) and "t" (tick).
std::string EncodeSenml(std::span<const CanonicalRecord> records);
std::vector<CanonicalRecord> DecodeSenml(std::string_view text);

// SensorML-like: one <Observation device=".." quantity=".." uom=".." time="..">
// element per record holding the value as text.
std::string EncodeSensorml(std::span<const CanonicalRecord> records);
std::vector<CanonicalRecord> DecodeSensorml(std::string_view text);

// Records of any structured body (raw, records, SenML-like, SensorML-like).
// Throws kInfeasibleConversion for robot commands.
std::vector<CanonicalRecord> RecordsOf(const Body& body, const RecordContext& ctx);
// Re-encodes records in `model`; kRaw yields a Records body.
Body EncodeAs(InfoModelKind model, std::span<const CanonicalRecord> records);

// The two robot verbs the command mapping knows about.
inline constexpr std::string_view kRobotVerbs[] = {"move", "grab"};

// Converts `body` to `target`. Identity when the body is already in `target`.
// Otherwise the (model-of-body, target) pair must be declared in `table`, or
// kInfeasibleConversion is thrown.
Body ImcConvert(const Body& body, InfoModelKind target,
                const FeasibilityTable& table, const RecordContext& ctx = {});

// Builds the SenML-like actuation request an application sends to drive a
// robot: `path` is the resource path ("/robots/r1/grab"), `query` the
// '&'-separated argument list.
EncodedText RobotRequest(std::string_view path, std::string_view query);

// Rewrites the protocol tag and re-keys protocol-specific headers through the
// fixed content-format table. Body, addresses, chain id and all other headers
// are untouched.
Envelope PcConvert(const Envelope& env, ProtocolKind target,
                   const FeasibilityTable& table);

// Round robin: group[seq mod |group|]. Throws kEmptyGroup, and
// kInvalidArgument if the group mixes kinds.
std::string LbSelect(std::span<const VnfInstance> group, std::uint64_t seq);

// Protocol-specific header keys the PC understands, for tests and docs.
struct HeaderMappingRow {
  std::string_view coap;
  std::string_view http;
  std::string_view lcp;
};
std::span<const HeaderMappingRow> ContentFormatTable();
std::span<const HeaderMappingRow> MethodTable();
inline constexpr std::string_view kCoapContentFormat = "coap.content_format";
inline constexpr std::string_view kHttpContentType = "http.content_type";
inline constexpr std::string_view kLcpPayload = "lcp.payload";
inline constexpr std::string_view kCoapMethod = "coap.method";
inline constexpr std::string_view kHttpMethod = "http.method";
inline constexpr std::string_view kLcpReply = "lcp.reply";

}  // namespace iotgw::vnf

#endif  // IOTGW_VNF_FUNCTIONS_H_
