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

#ifndef IOTGW_ORCHESTRATOR_PLAN_SERVER_H_
#define IOTGW_ORCHESTRATOR_PLAN_SERVER_H_

#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "iotgw/orchestrator/orchestrator.h"

namespace iotgw::orchestrator {

// Serves the orchestration plan resource over HTTP:
//   POST   /OrchestrationPlan
//   GET    /OrchestrationPlan/{Id}
//   GET    /OrchestrationPlan/all
//   PUT    /OrchestrationPlan/{Id}
//   DELETE /OrchestrationPlan/{Id}
// Requests are linearized on `mu`. After a write, `settle` runs the
// simulation until the orchestrator is idle.
class PlanServer {
 public:
  PlanServer(Orchestrator& orchestrator, std::mutex& mu, std::function<void()> settle);
  ~PlanServer();
  PlanServer(const PlanServer&) = delete;
  PlanServer& operator=(const PlanServer&) = delete;

  // Binds and serves on a background thread. Port 0 picks a free port.
  // Returns the bound port. Throws kIo when binding fails.
  int Start(const std::string& host, int port);
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace iotgw::orchestrator

#endif  // IOTGW_ORCHESTRATOR_PLAN_SERVER_H_
