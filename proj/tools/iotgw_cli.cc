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

// iotgw: runs gateway scenarios and experiments in simulated time.

#include <chrono>
#include <csignal>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "iotgw/model/error.h"
#include "iotgw/orchestrator/plan_server.h"
#include "iotgw/sim/experiments.h"
#include "iotgw/sim/world.h"

namespace {

using iotgw::sim::MetricsReport;
using iotgw::sim::RunResult;

volatile std::sig_atomic_t g_stop = 0;

void OnSignal(int) { g_stop = 1; }

void PrintSummary(const std::string& label, const MetricsReport& report) {
  std::cout << label << ": plans_done=" << report.plans_done
            << " instantiations=" << report.instantiations
            << " provisioning=" << report.provisioning_time
            << " orchestration=" << report.orchestration_time
            << " (deploy=" << report.deploy_time << " chain=" << report.chain_time
            << " overlay=" << report.overlay_time << ")\n";
  for (const auto& app : report.apps) {
    std::cout << "  " << app.app_id << ": "
              << (app.notification && app.notification->available() ? "available"
                                                                     : "unavailable");
    if (app.e2e) std::cout << " e2e=" << *app.e2e;
    std::cout << " records=" << app.records.size() << " commands=" << app.commands.size()
              << "\n";
  }
  for (const std::string& error : report.errors) std::cout << "  error: " << error << "\n";
}

int Run(const std::string& scenario, std::optional<std::uint64_t> seed,
        std::optional<int> serve_port, const std::string& out_dir) {
  iotgw::sim::ScenarioConfig cfg = iotgw::sim::LoadScenario(scenario);
  if (seed) cfg.seed = *seed;
  iotgw::sim::World world(cfg);
  world.Start();
  world.RunUntilIdle();

  if (serve_port) {
    std::mutex mu;
    iotgw::orchestrator::PlanServer server(world.orchestrator(), mu,
                                           [&world] { world.RunUntilIdle(); });
    int port = server.Start("127.0.0.1", *serve_port);
    std::cout << "serving /OrchestrationPlan on 127.0.0.1:" << port
              << " (Ctrl-C to stop)" << std::endl;
    std::signal(SIGINT, OnSignal);
    std::signal(SIGTERM, OnSignal);
    while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
    server.Stop();
  }

  MetricsReport report = world.Report();
  iotgw::sim::EmitReport(report, world.log().ToText(), out_dir);
  PrintSummary(cfg.name, report);
  std::cout << "wrote " << out_dir << "/metrics.csv and " << out_dir << "/events.log\n";
  return report.errors.empty() ? 0 : 2;
}

int Scale(int k, const std::string& out_dir) {
  iotgw::sim::ScenarioConfig cfg = iotgw::sim::GenScaleTopology(k);
  RunResult result = iotgw::sim::RunScenario(cfg);
  iotgw::sim::EmitReport(result.report, result.events, out_dir);
  std::cout << "k=" << k << " overlay_nodes=" << iotgw::sim::ScaleOverlayNodes(k)
            << " gateway_overlay=" << result.report.gateway_overlay_size << "\n";
  PrintSummary(cfg.name, result.report);
  return result.report.errors.empty() ? 0 : 2;
}

int CompareOrders(const std::string& scenario) {
  iotgw::sim::OrderResult result =
      iotgw::sim::CompareChainOrders(iotgw::sim::LoadScenario(scenario));
  for (const auto& [label, run] : {std::pair{"DA-first", &result.da_first},
                                   std::pair{"IMC-first", &result.imc_first}}) {
    const iotgw::sim::AppOutcome* app = run->report.App(result.app_id);
    std::cout << label << ": imc_invocations=" << run->report.InvocationsOf("IMC")
              << " da_invocations=" << run->report.InvocationsOf("DA")
              << " e2e=" << (app && app->e2e ? std::to_string(*app->e2e) : "-")
              << " records=" << (app ? app->records.size() : 0) << "\n";
  }
  const auto* a = result.da_first.report.App(result.app_id);
  const auto* b = result.imc_first.report.App(result.app_id);
  bool same = a && b && a->records == b->records;
  std::cout << "same final records: " << (same ? "yes" : "no") << "\n";
  return 0;
}

int Upgrade(const std::string& scenario) {
  iotgw::sim::UpgradeResult result =
      iotgw::sim::RunUpgradeScenario(iotgw::sim::LoadScenario(scenario));
  auto show = [](const char* label, const auto& plan) {
    std::cout << label << ": ";
    if (!plan) {
      std::cout << "no plan\n";
      return;
    }
    std::cout << "instantiated=" << plan->InstantiationCount()
              << " orchestration=" << plan->OrchestrationTime() << " status="
              << iotgw::orchestrator::Name(plan->status) << "\n";
  };
  show("fresh", result.fresh_plan);
  show("upgrade", result.upgrade_plan);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NFV/SDN IoT gateway simulator"};
  app.require_subcommand(1);

  std::string scenario;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<int> serve_port;
  int k = 3;

  auto* run = app.add_subcommand("run", "Run a scenario and write metrics.csv and events.log");
  run->add_option("--scenario", scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--serve-plans", serve_port,
                  "Serve the orchestration plan API on this port after the run");
  run->add_option("--out", out_dir, "Output directory");

  auto* scale = app.add_subcommand("scale", "Run the generated k-instance topology");
  scale->add_option("--k", k, "Instances per function")->required()->check(CLI::Range(1, 64));
  scale->add_option("--out", out_dir, "Output directory")->required();

  auto* orders = app.add_subcommand("compare-orders", "Compare DA-first and IMC-first chains");
  orders->add_option("--scenario", scenario, "Scenario file")->required()->check(CLI::ExistingFile);

  auto* upgrade = app.add_subcommand("upgrade", "Compare a fresh deploy with an upgrade");
  upgrade->add_option("--scenario", scenario, "Scenario file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return Run(scenario, seed, serve_port, out_dir);
    if (*scale) return Scale(k, out_dir);
    if (*orders) return CompareOrders(scenario);
    if (*upgrade) return Upgrade(scenario);
  } catch (const iotgw::Error& e) {
    std::cerr << "iotgw: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
