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

#ifndef IOTGW_MODEL_CODEC_H_
#define IOTGW_MODEL_CODEC_H_

#include <string>
#include <string_view>

#include "iotgw/model/envelope.h"

namespace iotgw {

// Line-oriented envelope text form:
//
//   protocol=CoapLike
//   h:app_level_dst=fire-app
//   h:app_level_src=sensor-a
//   trace=SW1|classify|A          (zero or more, in hop order)
//   body=raw:23.5
//   <blank line>
//
// Headers are written in key order. Values percent-escape '%', '=' and '\n'.
// Body tokens additionally escape the body delimiters ',', ';' and '|'.
std::string EncodeEnvelope(const Envelope& env);

// Decodes exactly one block. Throws MalformedEnvelope with the 1-based line of
// the first grammar violation.
Envelope DecodeEnvelope(std::string_view text);

std::string PercentEscape(std::string_view text, std::string_view extra = {});
// Throws Error(kInvalidArgument) on a truncated or non-hex escape.
std::string PercentUnescape(std::string_view text);

// Shortest decimal text that parses back to the same double.
std::string FormatDecimal(double value);
bool ParseDecimal(std::string_view text, double& out);

}  // namespace iotgw

#endif  // IOTGW_MODEL_CODEC_H_
