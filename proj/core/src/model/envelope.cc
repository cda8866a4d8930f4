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

#include "iotgw/model/envelope.h"

#include "iotgw/model/error.h"

namespace iotgw {

InfoModelKind ModelOf(const Body& body) {
  struct Visitor {
    InfoModelKind operator()(const RawValues&) const { return InfoModelKind::kRaw; }
    InfoModelKind operator()(const Records&) const { return InfoModelKind::kRaw; }
    InfoModelKind operator()(const EncodedText& t) const { return t.model; }
    InfoModelKind operator()(const RobotCommand&) const {
      return InfoModelKind::kRobotCmd;
    }
  };
  return std::visit(Visitor{}, body);
}

bool IsValidHeaderKey(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (c < '!' || c > '~' || c == '=') return false;
  }
  return true;
}

namespace {

void CheckLcpBody(ProtocolKind protocol, const Body& body) {
  if (protocol == ProtocolKind::kLcpLike &&
      !std::holds_alternative<RobotCommand>(body)) {
    throw Error(ErrorCode::kInvalidEnvelope,
                "LcpLike envelopes may only carry robot commands");
  }
}

}  // namespace

Envelope::Envelope(ProtocolKind protocol, std::string src, std::string dst,
                   Body body)
    : protocol_(protocol), body_(std::move(body)) {
  if (src.empty() || dst.empty()) {
    throw Error(ErrorCode::kInvalidEnvelope,
                "application-level addresses must be non-empty");
  }
  CheckLcpBody(protocol_, body_);
  headers_.emplace(header::kSrc, std::move(src));
  headers_.emplace(header::kDst, std::move(dst));
}

void Envelope::set_protocol(ProtocolKind protocol) {
  CheckLcpBody(protocol, body_);
  protocol_ = protocol;
}

void Envelope::set_body(Body body) {
  CheckLcpBody(protocol_, body);
  body_ = std::move(body);
}

std::optional<std::string> Envelope::Header(std::string_view key) const {
  auto it = headers_.find(key);
  if (it == headers_.end()) return std::nullopt;
  return it->second;
}

void Envelope::SetHeader(std::string_view key, std::string value) {
  if (!IsValidHeaderKey(key)) {
    throw Error(ErrorCode::kInvalidEnvelope,
                "invalid header key '" + std::string(key) + "'");
  }
  if (key == header::kChainId) {
    StampChainId(value);
    return;
  }
  if ((key == header::kSrc || key == header::kDst) && value.empty()) {
    throw Error(ErrorCode::kInvalidEnvelope,
                "application-level addresses must be non-empty");
  }
  headers_.insert_or_assign(std::string(key), std::move(value));
}

void Envelope::EraseHeader(std::string_view key) {
  if (key == header::kSrc || key == header::kDst || key == header::kChainId) {
    throw Error(ErrorCode::kInvalidEnvelope,
                "header '" + std::string(key) + "' cannot be removed");
  }
  auto it = headers_.find(key);
  if (it != headers_.end()) headers_.erase(it);
}

const std::string& Envelope::src() const {
  return headers_.find(header::kSrc)->second;
}

const std::string& Envelope::dst() const {
  return headers_.find(header::kDst)->second;
}

void Envelope::StampChainId(std::string_view chain_id) {
  if (chain_id.empty()) {
    throw Error(ErrorCode::kInvalidEnvelope, "chain id must be non-empty");
  }
  auto it = headers_.find(header::kChainId);
  if (it != headers_.end()) {
    if (it->second != chain_id) {
      throw Error(ErrorCode::kChainIdOverwrite,
                  "envelope already carries chain " + it->second +
                      ", refusing " + std::string(chain_id));
    }
    return;
  }
  headers_.emplace(header::kChainId, std::string(chain_id));
}

void Envelope::SetAppRequirements(const AppRequirements& req) {
  SetHeader(header::kAppProtocol, std::string(Name(req.protocol)));
  SetHeader(header::kAppInfoModel, std::string(Name(req.info_model)));
  SetHeader(header::kAppAggregation, std::string(Name(req.aggregation)));
}

std::optional<AppRequirements> Envelope::app_requirements() const {
  auto p = Header(header::kAppProtocol);
  auto m = Header(header::kAppInfoModel);
  auto a = Header(header::kAppAggregation);
  if (!p || !m || !a) return std::nullopt;
  auto protocol = ParseProtocol(*p);
  auto model = ParseInfoModel(*m);
  auto aggregation = ParseAggregation(*a);
  if (!protocol || !model || !aggregation) return std::nullopt;
  return AppRequirements{*protocol, *model, *aggregation};
}

void Envelope::SetDeviceProps(const DeviceProps& props) {
  SetHeader(header::kDevProtocol, std::string(Name(props.protocol)));
  SetHeader(header::kDevInfoModel, std::string(Name(props.info_model)));
}

std::optional<DeviceProps> Envelope::device_props() const {
  auto p = Header(header::kDevProtocol);
  auto m = Header(header::kDevInfoModel);
  if (!p || !m) return std::nullopt;
  auto protocol = ParseProtocol(*p);
  auto model = ParseInfoModel(*m);
  if (!protocol || !model) return std::nullopt;
  return DeviceProps{*protocol, *model};
}

}  // namespace iotgw
