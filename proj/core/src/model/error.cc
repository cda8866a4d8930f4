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

#include "iotgw/model/error.h"

namespace iotgw {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMalformedEnvelope: return "MalformedEnvelope";
    case ErrorCode::kInvalidEnvelope: return "InvalidEnvelope";
    case ErrorCode::kChainIdOverwrite: return "ChainIdOverwrite";
    case ErrorCode::kFunctionUnavailable: return "FunctionUnavailable";
    case ErrorCode::kDuplicatePackage: return "DuplicatePackage";
    case ErrorCode::kHostFull: return "HostFull";
    case ErrorCode::kHostNotCapable: return "HostNotCapable";
    case ErrorCode::kUnknownHost: return "UnknownHost";
    case ErrorCode::kUnknownInstance: return "UnknownInstance";
    case ErrorCode::kInfeasibleConversion: return "InfeasibleConversion";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kUnknownSwitch: return "UnknownSwitch";
    case ErrorCode::kDanglingTarget: return "DanglingTarget";
    case ErrorCode::kNoVnfAtHop: return "NoVnfAtHop";
    case ErrorCode::kUnclassifiableRequest: return "UnclassifiableRequest";
    case ErrorCode::kNotTableOwner: return "NotTableOwner";
    case ErrorCode::kUnknownIngress: return "UnknownIngress";
    case ErrorCode::kMissingVnf: return "MissingVnf";
    case ErrorCode::kNoPath: return "NoPath";
    case ErrorCode::kAlreadyCreated: return "AlreadyCreated";
    case ErrorCode::kOverlayNotCreated: return "OverlayNotCreated";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kNotMember: return "NotMember";
    case ErrorCode::kNotCoLocated: return "NotCoLocated";
    case ErrorCode::kMasterLeft: return "MasterLeft";
    case ErrorCode::kInvalidPlanRequest: return "InvalidPlanRequest";
    case ErrorCode::kPlanNotFound: return "PlanNotFound";
    case ErrorCode::kPlanAlreadyRunning: return "PlanAlreadyRunning";
    case ErrorCode::kNoMatchingDevices: return "NoMatchingDevices";
    case ErrorCode::kServiceUnavailable: return "ServiceUnavailable";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

MalformedEnvelope::MalformedEnvelope(std::size_t line,
                                     const std::string& reason)
    : Error(ErrorCode::kMalformedEnvelope,
            "line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(reason) {}

}  // namespace iotgw
