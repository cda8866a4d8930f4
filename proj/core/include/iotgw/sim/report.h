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

#ifndef IOTGW_SIM_REPORT_H_
#define IOTGW_SIM_REPORT_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iotgw/agents/agents.h"
#include "iotgw/model/envelope.h"
#include "iotgw/orchestrator/plan.h"

namespace iotgw::sim {

// What one application experienced.
struct AppOutcome {
  std::string app_id;
  std::optional<agents::Notification> notification;
  std::optional<Ticks> requested_at;
  std::optional<Ticks> notified_at;
  std::optional<orchestrator::OrchestrationPlan> plan;
  // Records delivered to the application.
  std::vector<CanonicalRecord> records;
  // Robot commands delivered to the actuation target.
  std::vector<RobotCommand> commands;
  std::optional<Ticks> e2e;
  // Hop trace of the last delivered envelope.
  std::vector<std::string> trace;

  std::optional<Ticks> ProvisioningTime() const;
};

struct MetricRow {
  std::string metric;
  std::string phase;
  Ticks value_ticks = 0;
  long long count = 0;

  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

struct MetricsReport {
  std::vector<AppOutcome> apps;
  // Summed over available apps / completed plans.
  Ticks provisioning_time = 0;
  Ticks orchestration_time = 0;
  Ticks deploy_time = 0;
  Ticks chain_time = 0;
  Ticks overlay_time = 0;
  std::size_t plans_done = 0;
  std::size_t instantiations = 0;
  std::map<std::string, std::size_t> vnf_invocations;
  std::map<std::string, std::size_t> messages;
  std::size_t gateway_overlay_size = 0;
  std::size_t application_overlay_size = 0;
  std::vector<std::string> errors;

  const AppOutcome* App(const std::string& id) const;
  // Invocations summed over instances of one function type ("IMC").
  std::size_t InvocationsOf(std::string_view type_prefix) const;
  std::vector<MetricRow> Rows() const;
  // `metric,phase,value_ticks,count` header plus Rows().
  std::string ToCsv() const;
};

// Writes metrics.csv and events.log under `dir` (created if missing).
// Throws kIo with the underlying message.
void EmitReport(const MetricsReport& report, const std::string& events_text,
                const std::string& dir);

}  // namespace iotgw::sim

#endif  // IOTGW_SIM_REPORT_H_
