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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "iotgw/model/error.h"
#include "iotgw/orchestrator/orchestrator.h"
#include "iotgw/orchestrator/plan.h"
#include "orchestrator_rig.h"
#include "test_support.h"

namespace iotgw::orchestrator {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::IsEmpty;
using iotgw::testing::Gen;
using iotgw::testing::kCases;

TEST(PlanRequestTest, Validation) {
  EXPECT_THAT(ValidatePlanRequest(ChainARequest()), IsEmpty());
  PlanRequest r = ChainARequest();
  r.ingress.clear();
  r.replicas = 0;
  r.configs[{VnfType::kIMC, 2}] = vnf::ModelPair{};
  EXPECT_EQ(ValidatePlanRequest(r).size(), 3u);
  r = ChainARequest();
  r.classification = {};
  r.chain.functions.clear();
  // Empty chain, empty classification and the now orphaned DA1 config.
  EXPECT_EQ(ValidatePlanRequest(r).size(), 3u);
}

TEST(PlanJsonTest, RequestShape) {
  std::string json = PlanRequestToJson(ChainARequest());
  EXPECT_THAT(json, HasSubstr(R"("chain":{"chain_id":"A","functions":["DA1","IMC1","PC1"]})"));
  EXPECT_THAT(json, HasSubstr(R"("egress":{"device":"sensor-a"})"));
  EXPECT_THAT(json, HasSubstr(R"("DA1":{"mode":"Average","window":5})"));
  EXPECT_EQ(PlanRequestFromJson(json), ChainARequest());
}

TEST(PlanJsonTest, RejectsMalformed) {
  for (const char* bad : {"", "[]", "{", R"({"chain":{"chain_id":"A","functions":["XX1"]}})",
                          R"({"chain":{"chain_id":"A","functions":["DA1"]},"ingress":5})"}) {
    EXPECT_EQ(CodeOf([&] { PlanRequestFromJson(bad); }), ErrorCode::kInvalidPlanRequest) << bad;
  }
}

// JSON round trip over random requests, every config variant included.
TEST(PlanJsonProperty, RequestRoundTrip) {
  Gen gen(64);
  const std::vector<VnfKind> kinds = {kDa1, kImc1, kPc1, {VnfType::kIMC, 2}, {VnfType::kPC, 2},
                                      {VnfType::kLB, 1}};
  for (int c = 0; c < kCases; ++c) {
    PlanRequest r;
    r.chain.chain_id = gen.Word(1, 3);
    std::set<VnfKind> picked;
    int n = gen.Int(1, 4);
    for (int i = 0; i < n; ++i) {
      VnfKind k = gen.Pick(kinds);
      if (picked.insert(k).second) r.chain.functions.push_back(k);
    }
    if (gen.Coin()) r.classification.app_requirements = AppRequirements{gen.Protocol(), gen.Model(), gen.Agg()};
    if (gen.Coin()) r.classification.device_props = DeviceProps{gen.Protocol(), gen.Model()};
    if (gen.Coin()) r.classification.app_level_dst = gen.Word();
    if (gen.Coin()) r.classification.app_level_src = gen.Word();
    if (gen.Coin()) r.classification.protocol = gen.Protocol();
    if (r.classification.Empty() || gen.Coin()) r.classification.chain_id = gen.Word(1, 2);
    r.ingress = gen.Word();
    switch (gen.Int(0, 3)) {
      case 0: r.egress = fabric::DeviceRef{gen.Word()}; break;
      case 1: r.egress = fabric::AppAddr{gen.Word()}; break;
      case 2: r.egress = fabric::SwitchRef{gen.Word()}; break;
      default: r.egress = fabric::VnfRef{gen.Word()}; break;
    }
    for (const VnfKind& k : r.chain.functions) {
      if (!gen.Coin()) continue;
      switch (k.type) {
        case VnfType::kDA:
          r.configs[k] = gen.Coin() ? vnf::DaConfig{vnf::DaMode::kThreshold, gen.Value(), 1}
                                    : vnf::DaConfig{vnf::DaMode::kAverage, 0, gen.Int(1, 9)};
          break;
        case VnfType::kIMC: r.configs[k] = vnf::ModelPair{gen.Model(), gen.Model()}; break;
        case VnfType::kPC: r.configs[k] = vnf::ProtocolPair{gen.Protocol(), gen.Protocol()}; break;
        case VnfType::kLB: r.configs[k] = vnf::LbConfig{kImc1, {gen.Word(), gen.Word()}}; break;
      }
    }
    int devices = gen.Int(0, 3);
    for (int i = 0; i < devices; ++i) r.devices.push_back(gen.Word());
    r.replicas = gen.Int(1, 5);
    ASSERT_EQ(PlanRequestFromJson(PlanRequestToJson(r)), r) << PlanRequestToJson(r);
  }
}

TEST(PlacementTest, RandomIsSeededAndSkipsFullHosts) {
  ResourceView view{{{Host("a", 1), 0}, {Host("b", 1), 1}, {Host("c", 1), 2}}};
  RandomPlacement p1(9), p2(9);
  for (int i = 0; i < 20; ++i) {
    std::string pick = p1.Choose("DA1", view);
    EXPECT_NE(pick, "a");
    EXPECT_EQ(pick, p2.Choose("DA1", view));
  }
  view.hosts[1].free_slots = view.hosts[2].free_slots = 0;
  EXPECT_EQ(CodeOf([&] { p1.Choose("DA1", view); }), ErrorCode::kHostFull);
}

TEST(PlacementTest, PinnedPrefersListOrder) {
  ResourceView view{{{Host("a", 1), 1}, {Host("b", 1), 1}}};
  PinnedPlacement pinned({{"DA1", {"b", "a"}}});
  EXPECT_EQ(pinned.Choose("DA1", view), "b");
  view.hosts[1].free_slots = 0;
  EXPECT_EQ(pinned.Choose("DA1", view), "a");
  view.hosts[0].free_slots = 0;
  EXPECT_EQ(CodeOf([&] { pinned.Choose("DA1", view); }), ErrorCode::kHostFull);
  EXPECT_EQ(CodeOf([&] { pinned.Choose("IMC1", view); }), ErrorCode::kHostFull);
}

TEST(OrchestratorTest, RunsThreePhasesOnTheHandSchedule) {
  Rig rig;
  std::vector<int> finished;
  rig.orch->Subscribe([&](const OrchestrationPlan& p) { finished.push_back(p.id); });
  EXPECT_EQ(rig.orch->CreatePlan(ChainARequest()), "/OrchestrationPlan/1");
  EXPECT_EQ(rig.orch->GetPlan(1).status, PlanStatus::kRunning);
  rig.loop.RunUntilIdle();
  const OrchestrationPlan& plan = rig.orch->GetPlan(1);
  ASSERT_EQ(plan.status, PlanStatus::kDone) << plan.error;
  EXPECT_THAT(finished, ElementsAre(1));

  // d = 10, c_join = 50. Deploy: discover 2d + catalogue d + fetch 2d +
  // one instance per host 2d. Chain: 3d. Overlay: node-SW2..4, three
  // instances and the sensor's proxy.
  const Ticks d = 10;
  EXPECT_EQ(plan.phase(PhaseKind::kDeploy).start, 0);
  EXPECT_EQ(plan.phase(PhaseKind::kDeploy).Duration(), 7 * d);
  EXPECT_EQ(plan.phase(PhaseKind::kChain).start, 7 * d);
  EXPECT_EQ(plan.phase(PhaseKind::kChain).Duration(), 3 * d);
  EXPECT_EQ(plan.phase(PhaseKind::kOverlayCreate).start, 10 * d);
  EXPECT_EQ(plan.phase(PhaseKind::kOverlayCreate).Duration(), 7 * 50);
  EXPECT_EQ(plan.OrchestrationTime(), 100 + 350);

  EXPECT_THAT(plan.instantiated, ElementsAre("DA1-1", "IMC1-1", "PC1-1"));
  EXPECT_THAT(plan.path, ElementsAre("SW1", "SW2", "SW3", "SW4"));
  EXPECT_THAT(plan.overlay_joined, ElementsAre("node-SW2", "node-SW3", "node-SW4", "DA1-1",
                                               "IMC1-1", "PC1-1", "rpi-3"));
  EXPECT_EQ(rig.manager.Instance("DA1-1")->host, "rpi-1");
  EXPECT_EQ(rig.fabric.EntryCount(), 4u);
  EXPECT_EQ(rig.overlay.Resolve("sensor-a", overlay::OverlayId::kGateway), "rpi-3");
}

TEST(OrchestratorTest, ReusesLiveFunctionsWithEqualConfig) {
  Rig rig;
  PlanRequest quake;
  quake.chain = {"Q", {kDa1, kImc1}};
  quake.classification.app_level_dst = "sensor-a";
  quake.ingress = "SW1";
  quake.egress = fabric::DeviceRef{"sensor-a"};
  quake.configs[kDa1] = vnf::DaConfig{vnf::DaMode::kThreshold, 50, 1};
  rig.orch->CreatePlan(quake);
  rig.loop.RunUntilIdle();
  rig.orch->CreatePlan(ChainARequest());
  rig.loop.RunUntilIdle();
  const OrchestrationPlan& plan = rig.orch->GetPlan(2);
  ASSERT_EQ(plan.status, PlanStatus::kDone) << plan.error;
  EXPECT_THAT(plan.instantiated, ElementsAre("DA1-2", "PC1-1"));
  EXPECT_EQ(plan.bindings.at(kImc1), "IMC1-1");
  EXPECT_LT(plan.OrchestrationTime(), rig.orch->GetPlan(1).OrchestrationTime() + 350);
}

TEST(OrchestratorTest, ReplicasGetABalancer) {
  Rig rig(3);
  PlanRequest r = ChainARequest();
  r.chain.functions = {kImc1};
  r.configs.clear();
  r.replicas = 2;
  rig.orch->CreatePlan(r);
  rig.loop.RunUntilIdle();
  const OrchestrationPlan& plan = rig.orch->GetPlan(1);
  ASSERT_EQ(plan.status, PlanStatus::kDone) << plan.error;
  EXPECT_EQ(plan.required.back(), (VnfKind{VnfType::kLB, 1}));
  EXPECT_EQ(plan.InstantiationCount(), 3u);
  EXPECT_EQ(plan.bindings.at(kImc1), "LB1-1");
  auto lb = rig.manager.Instance("LB1-1");
  EXPECT_EQ(std::get<vnf::LbConfig>(lb->config).members,
            (std::vector<std::string>{"IMC1-1", "IMC1-2"}));
}

TEST(OrchestratorTest, MissingFunctionFailsWithoutResidue) {
  vnf::GatewayFunctionsStore store = vnf::DefaultStore();
  store.Remove(kPc1);
  Rig rig(2, std::move(store));
  Rig::State before = rig.Capture();
  rig.orch->CreatePlan(ChainARequest());
  rig.loop.RunUntilIdle();
  const OrchestrationPlan& plan = rig.orch->GetPlan(1);
  EXPECT_EQ(plan.status, PlanStatus::kFailed);
  EXPECT_EQ(plan.error_code, ErrorCode::kFunctionUnavailable);
  EXPECT_EQ(plan.phase(PhaseKind::kDeploy).status, PlanStatus::kFailed);
  EXPECT_EQ(plan.phase(PhaseKind::kChain).status, PlanStatus::kPending);
  EXPECT_EQ(rig.Capture(), before);
  EXPECT_TRUE(rig.manager.log().empty());
}

TEST(OrchestratorTest, FifoAndPendingOnlyUpdates) {
  Rig rig;
  rig.orch->CreatePlan(ChainARequest());
  PlanRequest second = ChainARequest();
  second.chain.chain_id = "B";
  rig.orch->CreatePlan(second);
  EXPECT_EQ(rig.orch->GetPlan(2).status, PlanStatus::kPending);
  EXPECT_EQ(CodeOf([&] { rig.orch->UpdatePlan(1, second); }), ErrorCode::kPlanAlreadyRunning);
  EXPECT_EQ(CodeOf([&] { rig.orch->DeletePlan(1); }), ErrorCode::kPlanAlreadyRunning);
  PlanRequest third = second;
  third.chain.chain_id = "C";
  rig.orch->UpdatePlan(2, third);
  EXPECT_EQ(rig.orch->GetPlan(2).request.chain.chain_id, "C");
  PlanRequest invalid = third;
  invalid.replicas = 0;
  EXPECT_EQ(CodeOf([&] { rig.orch->UpdatePlan(2, invalid); }), ErrorCode::kInvalidPlanRequest);
  rig.loop.RunUntilIdle();
  const OrchestrationPlan& p1 = rig.orch->GetPlan(1);
  const OrchestrationPlan& p2 = rig.orch->GetPlan(2);
  EXPECT_LE(*p1.phase(PhaseKind::kOverlayCreate).end, *p2.phase(PhaseKind::kDeploy).start);
  EXPECT_EQ(rig.orch->AllPlans().size(), 2u);
  EXPECT_TRUE(rig.orch->Idle());
  EXPECT_EQ(CodeOf([&] { rig.orch->UpdatePlan(2, third); }), ErrorCode::kPlanAlreadyRunning);
}

TEST(OrchestratorTest, DeleteRestoresThePrePlanState) {
  Rig rig;
  Rig::State before = rig.Capture();
  rig.orch->CreatePlan(ChainARequest());
  rig.loop.RunUntilIdle();
  EXPECT_NE(rig.Capture(), before);
  rig.orch->DeletePlan(1);
  EXPECT_EQ(rig.Capture(), before);
  EXPECT_FALSE(rig.overlay.IsMember("DA1-1", overlay::OverlayId::kGateway));
  EXPECT_EQ(CodeOf([&] { rig.orch->GetPlan(1); }), ErrorCode::kPlanNotFound);
  EXPECT_EQ(CodeOf([&] { rig.orch->DeletePlan(1); }), ErrorCode::kPlanNotFound);
}

TEST(OrchestratorTest, DeletePendingNeverRuns) {
  Rig rig;
  rig.orch->CreatePlan(ChainARequest());
  PlanRequest second = ChainARequest();
  second.chain.chain_id = "B";
  rig.orch->CreatePlan(second);
  rig.orch->DeletePlan(2);
  rig.loop.RunUntilIdle();
  EXPECT_EQ(rig.orch->AllPlans().size(), 1u);
  EXPECT_EQ(rig.controller.registrations().size(), 1u);
}

TEST(OrchestratorTest, UnavailableAndInvalid) {
  Rig rig;
  rig.orch->set_available(false);
  EXPECT_EQ(CodeOf([&] { rig.orch->CreatePlan(ChainARequest()); }),
            ErrorCode::kServiceUnavailable);
  rig.orch->set_available(true);
  PlanRequest bad = ChainARequest();
  bad.chain.functions.clear();
  EXPECT_EQ(CodeOf([&] { rig.orch->CreatePlan(bad); }), ErrorCode::kInvalidPlanRequest);
  EXPECT_TRUE(rig.orch->AllPlans().empty());
  EXPECT_EQ(Orchestrator::IdFromUri("/OrchestrationPlan/12"), 12);
}

TEST(OrchestratorTest, DiscoveryListsCapableHostsWithFreeSlots) {
  Rig rig;
  rig.manager.Instantiate({kDa1, "1.0", {}}, "rpi-2");
  ResourceView view = rig.orch->DiscoverDevices();
  ASSERT_EQ(view.hosts.size(), 3u);
  EXPECT_EQ(view.hosts[1].device.id, "rpi-2");
  EXPECT_EQ(view.hosts[1].free_slots, 1);
}

}  // namespace
}  // namespace iotgw::orchestrator
