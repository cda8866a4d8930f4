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

#include "iotgw/orchestrator/plan_server.h"

#include <mutex>
#include <string>

#include "gtest/gtest.h"
#include "httplib.h"
#include "iotgw/orchestrator/plan.h"
#include "json.hpp"
#include "orchestrator_rig.h"

namespace iotgw::orchestrator {
namespace {

using nlohmann::json;

class PlanServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_ = std::make_unique<PlanServer>(*rig_.orch, mu_, [this] { rig_.loop.RunUntilIdle(); });
    port_ = server_->Start("127.0.0.1", 0);
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void TearDown() override { server_->Stop(); }

  httplib::Result Post(const PlanRequest& r) {
    return client_->Post("/OrchestrationPlan", PlanRequestToJson(r), "application/json");
  }

  Rig rig_;
  std::mutex mu_;
  std::unique_ptr<PlanServer> server_;
  std::unique_ptr<httplib::Client> client_;
  int port_ = 0;
};

TEST_F(PlanServerTest, FullLifecycle) {
  Rig::State before = rig_.Capture();
  auto created = Post(ChainARequest());
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  EXPECT_EQ(created->get_header_value("Location"), "/OrchestrationPlan/1");
  EXPECT_EQ(json::parse(created->body)["uri"], "/OrchestrationPlan/1");

  auto one = client_->Get("/OrchestrationPlan/1");
  ASSERT_TRUE(one);
  EXPECT_EQ(one->status, 200);
  json plan = json::parse(one->body);
  EXPECT_EQ(plan["status"], "Done");
  EXPECT_EQ(plan["phases"].size(), 3u);

  auto all = client_->Get("/OrchestrationPlan/all");
  ASSERT_TRUE(all);
  EXPECT_EQ(all->status, 200);
  EXPECT_EQ(json::parse(all->body).size(), 1u);

  // Done plans are no longer editable.
  auto put = client_->Put("/OrchestrationPlan/1", PlanRequestToJson(ChainARequest()),
                          "application/json");
  ASSERT_TRUE(put);
  EXPECT_EQ(put->status, 409);

  auto del = client_->Delete("/OrchestrationPlan/1");
  ASSERT_TRUE(del);
  EXPECT_EQ(del->status, 204);
  {
    std::lock_guard lock(mu_);
    EXPECT_EQ(rig_.Capture(), before);
  }
  EXPECT_EQ(client_->Get("/OrchestrationPlan/1")->status, 404);
  EXPECT_EQ(client_->Delete("/OrchestrationPlan/1")->status, 404);
  EXPECT_EQ(json::parse(client_->Get("/OrchestrationPlan/all")->body).size(), 0u);
}

TEST_F(PlanServerTest, PutEditsPendingPlan) {
  // A plan is only Pending while another runs, so queue two under the lock.
  {
    std::lock_guard lock(mu_);
    rig_.orch->CreatePlan(ChainARequest());
    rig_.orch->CreatePlan(ChainARequest());
  }
  PlanRequest edited = ChainARequest();
  edited.chain.chain_id = "Z";
  auto put = client_->Put("/OrchestrationPlan/2", PlanRequestToJson(edited), "application/json");
  ASSERT_TRUE(put);
  EXPECT_EQ(put->status, 200);
  EXPECT_EQ(json::parse(put->body)["request"]["chain"]["chain_id"], "Z");
  EXPECT_EQ(client_->Delete("/OrchestrationPlan/1")->status, 409);
}

TEST_F(PlanServerTest, ClientErrors) {
  auto bad = client_->Post("/OrchestrationPlan", "{not json", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
  EXPECT_EQ(json::parse(bad->body)["error"], "InvalidPlanRequest");
  PlanRequest empty = ChainARequest();
  empty.chain.functions.clear();
  EXPECT_EQ(Post(empty)->status, 400);
  EXPECT_EQ(client_->Get("/OrchestrationPlan/7")->status, 404);
  EXPECT_EQ(client_->Put("/OrchestrationPlan/7", PlanRequestToJson(ChainARequest()),
                         "application/json")->status, 404);
  {
    std::lock_guard lock(mu_);
    rig_.orch->set_available(false);
  }
  EXPECT_EQ(Post(ChainARequest())->status, 503);
}

}  // namespace
}  // namespace iotgw::orchestrator
