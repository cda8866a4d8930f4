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

#include "iotgw/sim/report.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "iotgw/model/error.h"

namespace iotgw::sim {

std::optional<Ticks> AppOutcome::ProvisioningTime() const {
  if (!requested_at || !notified_at || !notification || !notification->available()) {
    return std::nullopt;
  }
  return *notified_at - *requested_at;
}

const AppOutcome* MetricsReport::App(const std::string& id) const {
  for (const AppOutcome& app : apps) {
    if (app.app_id == id) return &app;
  }
  return nullptr;
}

std::size_t MetricsReport::InvocationsOf(std::string_view type_prefix) const {
  std::size_t total = 0;
  for (const auto& [instance, count] : vnf_invocations) {
    if (instance.starts_with(type_prefix)) total += count;
  }
  return total;
}

std::vector<MetricRow> MetricsReport::Rows() const {
  std::vector<MetricRow> rows;
  auto add = [&rows](std::string metric, std::string phase, Ticks value, long long count) {
    rows.push_back({std::move(metric), std::move(phase), value, count});
  };
  long long available = 0;
  for (const AppOutcome& app : apps) available += app.ProvisioningTime().has_value();
  add("provisioning", "total", provisioning_time, available);
  for (const AppOutcome& app : apps) {
    auto t = app.ProvisioningTime();
    add("provisioning", app.app_id, t.value_or(0), t ? 1 : 0);
  }
  const auto plans = static_cast<long long>(plans_done);
  add("orchestration", "total", orchestration_time, plans);
  add("orchestration", "deploy", deploy_time, plans);
  add("orchestration", "chain", chain_time, plans);
  add("orchestration", "overlay", overlay_time, plans);
  add("instantiations", "total", 0, static_cast<long long>(instantiations));
  for (const AppOutcome& app : apps) {
    auto count = static_cast<long long>(app.commands.empty() ? app.records.size()
                                                             : app.commands.size());
    add("e2e", app.app_id, app.e2e.value_or(0), app.e2e ? count : 0);
  }
  for (const auto& [instance, count] : vnf_invocations) {
    add("vnf", instance, 0, static_cast<long long>(count));
  }
  for (const auto& [kind, count] : messages) {
    add("messages", kind, 0, static_cast<long long>(count));
  }
  add("overlay", "gateway", 0, static_cast<long long>(gateway_overlay_size));
  add("overlay", "application", 0, static_cast<long long>(application_overlay_size));
  add("errors", "total", 0, static_cast<long long>(errors.size()));
  return rows;
}

std::string MetricsReport::ToCsv() const {
  std::ostringstream out;
  out << "metric,phase,value_ticks,count\n";
  for (const MetricRow& row : Rows()) {
    out << row.metric << ',' << row.phase << ',' << row.value_ticks << ',' << row.count
        << '\n';
  }
  return out.str();
}

namespace {

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace

void EmitReport(const MetricsReport& report, const std::string& events_text,
                const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, dir + ": " + ec.message());
  WriteFile(std::filesystem::path(dir) / "metrics.csv", report.ToCsv());
  WriteFile(std::filesystem::path(dir) / "events.log", events_text);
}

}  // namespace iotgw::sim
