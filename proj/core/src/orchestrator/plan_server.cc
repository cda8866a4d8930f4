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

#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace iotgw::orchestrator {

namespace {

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidPlanRequest:
      return 400;
    case ErrorCode::kPlanNotFound:
      return 404;
    case ErrorCode::kPlanAlreadyRunning:
      return 409;
    case ErrorCode::kServiceUnavailable:
      return 503;
    default:
      return 500;
  }
}

void SendError(httplib::Response& res, const Error& error) {
  res.status = StatusFor(error.code());
  nlohmann::json body = {{"error", ErrorCodeName(error.code())}, {"detail", error.detail()}};
  res.set_content(body.dump(), "application/json");
}

}  // namespace

struct PlanServer::Impl {
  Orchestrator& orchestrator;
  std::mutex& mu;
  std::function<void()> settle;
  httplib::Server server;
  std::thread thread;

  // Runs `fn` under the lock and maps domain errors to HTTP statuses.
  template <typename Fn>
  void Guarded(httplib::Response& res, Fn&& fn) {
    std::lock_guard lock(mu);
    try {
      fn();
    } catch (const Error& error) {
      SendError(res, error);
    }
  }

  int IdOf(const httplib::Request& req) { return std::stoi(req.matches[1].str()); }

  void Routes() {
    server.Post("/OrchestrationPlan", [this](const httplib::Request& req,
                                             httplib::Response& res) {
      Guarded(res, [&] {
        std::string uri = orchestrator.CreatePlan(PlanRequestFromJson(req.body));
        const OrchestrationPlan& plan = orchestrator.GetPlan(Orchestrator::IdFromUri(uri));
        nlohmann::json body = {{"uri", uri}, {"id", plan.id}, {"status", Name(plan.status)}};
        settle();
        res.status = 201;
        res.set_header("Location", uri);
        res.set_content(body.dump(), "application/json");
      });
    });
    // Registered before the {Id} pattern so "all" never parses as an id.
    server.Get("/OrchestrationPlan/all", [this](const httplib::Request&,
                                                httplib::Response& res) {
      Guarded(res, [&] {
        res.set_content(PlansToJson(orchestrator.AllPlans()), "application/json");
      });
    });
    server.Get(R"(/OrchestrationPlan/(\d+))", [this](const httplib::Request& req,
                                                     httplib::Response& res) {
      Guarded(res, [&] {
        res.set_content(PlanToJson(orchestrator.GetPlan(IdOf(req))), "application/json");
      });
    });
    server.Put(R"(/OrchestrationPlan/(\d+))", [this](const httplib::Request& req,
                                                     httplib::Response& res) {
      Guarded(res, [&] {
        int id = IdOf(req);
        orchestrator.UpdatePlan(id, PlanRequestFromJson(req.body));
        res.set_content(PlanToJson(orchestrator.GetPlan(id)), "application/json");
      });
    });
    server.Delete(R"(/OrchestrationPlan/(\d+))", [this](const httplib::Request& req,
                                                        httplib::Response& res) {
      Guarded(res, [&] {
        orchestrator.DeletePlan(IdOf(req));
        settle();
        res.status = 204;
      });
    });
  }
};

PlanServer::PlanServer(Orchestrator& orchestrator, std::mutex& mu,
                       std::function<void()> settle)
    : impl_(new Impl{orchestrator, mu, std::move(settle), {}, {}}) {
  impl_->Routes();
}

PlanServer::~PlanServer() { Stop(); }

int PlanServer::Start(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw Error(ErrorCode::kIo, "cannot bind " + host + ":" + std::to_string(port));
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void PlanServer::Stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace iotgw::orchestrator
