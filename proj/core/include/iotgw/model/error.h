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

#ifndef IOTGW_MODEL_ERROR_H_
#define IOTGW_MODEL_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace iotgw {

// Every failure the gateway can report. Names follow the failure, not the
// module that raises it, because several modules surface the same condition.
enum class ErrorCode {
  kInvalidArgument,
  kMalformedEnvelope,
  kInvalidEnvelope,
  kChainIdOverwrite,
  kFunctionUnavailable,
  kDuplicatePackage,
  kHostFull,
  kHostNotCapable,
  kUnknownHost,
  kUnknownInstance,
  kInfeasibleConversion,
  kEmptyGroup,
  kUnknownSwitch,
  kDanglingTarget,
  kNoVnfAtHop,
  kUnclassifiableRequest,
  kNotTableOwner,
  kUnknownIngress,
  kMissingVnf,
  kNoPath,
  kAlreadyCreated,
  kOverlayNotCreated,
  kUnreachable,
  kNotMember,
  kNotCoLocated,
  kMasterLeft,
  kInvalidPlanRequest,
  kPlanNotFound,
  kPlanAlreadyRunning,
  kNoMatchingDevices,
  kServiceUnavailable,
  kInvalidConfig,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Raised by the envelope and scenario decoders. `line` is 1-based.
class MalformedEnvelope : public Error {
 public:
  MalformedEnvelope(std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace iotgw

#endif  // IOTGW_MODEL_ERROR_H_
