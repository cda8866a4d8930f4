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

#include "iotgw/model/codec.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <set>

#include "iotgw/model/error.h"

namespace iotgw {
namespace {

constexpr std::string_view kLineSpecials = "%=\n";
constexpr std::string_view kBodySpecials = ",;|";

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string BodyToken(std::string_view text) {
  return PercentEscape(text, kBodySpecials);
}

std::string EncodeBody(const Body& body) {
  struct Visitor {
    std::string operator()(const RawValues& raw) const {
      std::string out = "raw:";
      for (std::size_t i = 0; i < raw.values.size(); ++i) {
        if (i > 0) out += ',';
        out += FormatDecimal(raw.values[i]);
      }
      return out;
    }
    std::string operator()(const Records& recs) const {
      std::string out = "records:";
      for (std::size_t i = 0; i < recs.records.size(); ++i) {
        const CanonicalRecord& r = recs.records[i];
        if (i > 0) out += ';';
        out += BodyToken(r.device_id) + '|' + BodyToken(r.quantity) + '|' +
               BodyToken(r.unit) + '|' + FormatDecimal(r.value) + '|' +
               std::to_string(r.timestamp);
      }
      return out;
    }
    std::string operator()(const EncodedText& t) const {
      return "text:" + std::string(Name(t.model)) + ':' + BodyToken(t.text);
    }
    std::string operator()(const RobotCommand& cmd) const {
      std::string out = "cmd:" + BodyToken(cmd.verb);
      for (const std::string& arg : cmd.args) out += ',' + BodyToken(arg);
      return out;
    }
  };
  return std::visit(Visitor{}, body);
}

bool ParseTicks(std::string_view text, Ticks& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

Body DecodeBody(std::string_view value, std::size_t line) {
  auto fail = [line](const std::string& why) -> MalformedEnvelope {
    return MalformedEnvelope(line, why);
  };
  auto unescape = [&](std::string_view token) {
    try {
      return PercentUnescape(token);
    } catch (const Error& e) {
      throw fail("bad escape in body: " + e.detail());
    }
  };
  std::size_t colon = value.find(':');
  if (colon == std::string_view::npos) throw fail("body has no kind prefix");
  std::string_view kind = value.substr(0, colon);
  std::string_view rest = value.substr(colon + 1);

  if (kind == "raw") {
    RawValues raw;
    if (rest.empty()) return raw;
    for (std::string_view token : Split(rest, ',')) {
      double v = 0;
      if (!ParseDecimal(token, v)) {
        throw fail("bad decimal '" + std::string(token) + "'");
      }
      raw.values.push_back(v);
    }
    return raw;
  }
  if (kind == "records") {
    Records recs;
    if (rest.empty()) return recs;
    for (std::string_view item : Split(rest, ';')) {
      auto fields = Split(item, '|');
      if (fields.size() != 5) throw fail("record needs 5 fields");
      CanonicalRecord r;
      r.device_id = unescape(fields[0]);
      r.quantity = unescape(fields[1]);
      r.unit = unescape(fields[2]);
      if (!ParseDecimal(fields[3], r.value)) throw fail("bad record value");
      if (!ParseTicks(fields[4], r.timestamp)) throw fail("bad record timestamp");
      recs.records.push_back(std::move(r));
    }
    return recs;
  }
  if (kind == "text") {
    std::size_t sep = rest.find(':');
    if (sep == std::string_view::npos) throw fail("text body has no model");
    auto model = ParseInfoModel(rest.substr(0, sep));
    if (!model) {
      throw fail("unknown info model '" + std::string(rest.substr(0, sep)) + "'");
    }
    return EncodedText{*model, unescape(rest.substr(sep + 1))};
  }
  if (kind == "cmd") {
    auto tokens = Split(rest, ',');
    RobotCommand cmd;
    cmd.verb = unescape(tokens.front());
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      cmd.args.push_back(unescape(tokens[i]));
    }
    return cmd;
  }
  throw fail("unknown body kind '" + std::string(kind) + "'");
}

}  // namespace

std::string PercentEscape(std::string_view text, std::string_view extra) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (kLineSpecials.find(c) != std::string_view::npos ||
        extra.find(c) != std::string_view::npos) {
      auto byte = static_cast<unsigned char>(c);
      out += '%';
      out += kHex[byte >> 4];
      out += kHex[byte & 0xF];
    } else {
      out += c;
    }
  }
  return out;
}

std::string PercentUnescape(std::string_view text) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '%') {
      out += text[i];
      continue;
    }
    if (i + 2 >= text.size()) {
      throw Error(ErrorCode::kInvalidArgument, "truncated percent escape");
    }
    int hi = hex(text[i + 1]);
    int lo = hex(text[i + 2]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kInvalidArgument, "non-hex percent escape");
    }
    out += static_cast<char>(hi * 16 + lo);
    i += 2;
  }
  return out;
}

std::string FormatDecimal(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

bool ParseDecimal(std::string_view text, double& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::string EncodeEnvelope(const Envelope& env) {
  std::string out = "protocol=";
  out += Name(env.protocol());
  out += '\n';
  for (const auto& [key, value] : env.headers()) {
    out += "h:" + key + '=' + PercentEscape(value) + '\n';
  }
  for (const std::string& hop : env.trace()) {
    out += "trace=" + PercentEscape(hop) + '\n';
  }
  out += "body=" + EncodeBody(env.body()) + "\n\n";
  return out;
}

Envelope DecodeEnvelope(std::string_view text) {
  std::optional<ProtocolKind> protocol;
  std::optional<Body> body;
  std::vector<std::pair<std::string, std::string>> headers;
  std::set<std::string, std::less<>> seen_keys;
  std::vector<std::string> trace;
  std::size_t protocol_line = 0;
  std::size_t body_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool terminated = false;
  while (pos < text.size()) {
    ++line_no;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      throw MalformedEnvelope(line_no, "line is not newline-terminated");
    }
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) {
      terminated = true;
      break;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw MalformedEnvelope(line_no, "expected key=value");
    }
    std::string_view key = line.substr(0, eq);
    std::string_view raw_value = line.substr(eq + 1);
    auto value = [&]() {
      try {
        return PercentUnescape(raw_value);
      } catch (const Error& e) {
        throw MalformedEnvelope(line_no, e.detail());
      }
    };

    if (key == "protocol") {
      if (protocol) throw MalformedEnvelope(line_no, "duplicate protocol");
      protocol = ParseProtocol(value());
      if (!protocol) {
        throw MalformedEnvelope(line_no,
                                "unknown protocol '" + std::string(raw_value) + "'");
      }
      protocol_line = line_no;
    } else if (key.substr(0, 2) == "h:") {
      std::string_view name = key.substr(2);
      if (!IsValidHeaderKey(name)) {
        throw MalformedEnvelope(line_no, "invalid header key");
      }
      if (!seen_keys.emplace(name).second) {
        throw MalformedEnvelope(line_no, "duplicate header '" + std::string(name) + "'");
      }
      headers.emplace_back(std::string(name), value());
    } else if (key == "trace") {
      trace.push_back(value());
    } else if (key == "body") {
      if (body) throw MalformedEnvelope(line_no, "duplicate body");
      body = DecodeBody(raw_value, line_no);
      body_line = line_no;
    } else {
      throw MalformedEnvelope(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!terminated) {
    throw MalformedEnvelope(line_no + 1, "block is not terminated by a blank line");
  }
  if (pos != text.size()) {
    throw MalformedEnvelope(line_no + 1, "trailing data after block");
  }
  if (!protocol) throw MalformedEnvelope(line_no, "missing protocol");
  if (!body) throw MalformedEnvelope(line_no, "missing body");

  std::optional<std::string> src;
  std::optional<std::string> dst;
  for (const auto& [k, v] : headers) {
    if (k == header::kSrc) src = v;
    if (k == header::kDst) dst = v;
  }
  if (!src) throw MalformedEnvelope(line_no, "missing app_level_src");
  if (!dst) throw MalformedEnvelope(line_no, "missing app_level_dst");

  try {
    Envelope env(*protocol, *src, *dst, std::move(*body));
    for (auto& [k, v] : headers) {
      if (k == header::kSrc || k == header::kDst) continue;
      env.SetHeader(k, std::move(v));
    }
    for (std::string& hop : trace) env.AppendTrace(std::move(hop));
    return env;
  } catch (const MalformedEnvelope&) {
    throw;
  } catch (const Error& e) {
    throw MalformedEnvelope(std::max(protocol_line, body_line), e.detail());
  }
}

}  // namespace iotgw
