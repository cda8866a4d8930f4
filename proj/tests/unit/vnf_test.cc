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

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "iotgw/model/error.h"
#include "iotgw/vnf/feasibility.h"
#include "iotgw/vnf/functions.h"
#include "iotgw/vnf/manager.h"
#include "iotgw/vnf/runtime.h"
#include "iotgw/vnf/store.h"
#include "test_support.h"

namespace iotgw::vnf {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using iotgw::testing::Gen;
using iotgw::testing::kCases;

constexpr VnfKind kDa1{VnfType::kDA, 1};
constexpr VnfKind kImc1{VnfType::kIMC, 1};
constexpr VnfKind kImc3{VnfType::kIMC, 3};
constexpr VnfKind kPc1{VnfType::kPC, 1};
constexpr VnfKind kPc2{VnfType::kPC, 2};
constexpr VnfKind kLb1{VnfType::kLB, 1};

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

DeviceDescriptor Host(const std::string& id, int capacity) {
  DeviceDescriptor d;
  d.id = id;
  d.device_class = DeviceClass::kB;
  d.capabilities.host_capacity = capacity;
  return d;
}

VnfPackage Pkg(VnfKind kind) { return {kind, "1.0", {}}; }

CanonicalRecord Rec(double v, Ticks t = 0) { return {"s", "temp", "Cel", v, t}; }

TEST(FeasibilityTest, DefaultTable) {
  FeasibilityTable t = FeasibilityTable::Default();
  EXPECT_EQ(t.ImcFor(InfoModelKind::kRaw, InfoModelKind::kSenmlLike), kImc1);
  EXPECT_EQ(t.ImcFor(InfoModelKind::kRaw, InfoModelKind::kSensormlLike),
            (VnfKind{VnfType::kIMC, 2}));
  EXPECT_EQ(t.ImcFor(InfoModelKind::kSenmlLike, InfoModelKind::kRobotCmd), kImc3);
  EXPECT_EQ(t.PcFor(ProtocolKind::kCoapLike, ProtocolKind::kHttpLike), kPc1);
  EXPECT_EQ(t.PcFor(ProtocolKind::kHttpLike, ProtocolKind::kLcpLike), kPc2);
  EXPECT_EQ(t.PcFor(ProtocolKind::kCoapLike, ProtocolKind::kLcpLike), std::nullopt);
  EXPECT_EQ(t.ImcPair(kImc1),
            (ModelPair{InfoModelKind::kRaw, InfoModelKind::kSenmlLike}));
  EXPECT_EQ(t.imc_entries().size(), 5u);
  EXPECT_EQ(t.pc_entries().size(), 4u);
}

TEST(DaTest, ThresholdKeepsStrictlyAbove) {
  std::vector<CanonicalRecord> in = {Rec(10), Rec(50), Rec(60), Rec(49.5), Rec(51)};
  auto out = DaProcess(in, DaConfig{DaMode::kThreshold, 50, 1});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].value, 60);
  EXPECT_EQ(out[1].value, 51);
}

TEST(DaTest, AverageWindowsWithShortTail) {
  std::vector<CanonicalRecord> in = {Rec(1, 0), Rec(2, 1), Rec(3, 2), Rec(4, 3), Rec(10, 4)};
  auto out = DaProcess(in, DaConfig{DaMode::kAverage, 0, 2});
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].value, 1.5);
  EXPECT_EQ(out[0].timestamp, 1);
  EXPECT_EQ(out[2].value, 10);
}

// Against a direct re-computation of both modes.
TEST(DaProperty, MatchesDirectComputation) {
  Gen gen(31);
  for (int c = 0; c < kCases; ++c) {
    auto records = gen.Records(12);
    double threshold = gen.Value();
    auto kept = DaProcess(records, DaConfig{DaMode::kThreshold, threshold, 1});
    std::vector<CanonicalRecord> expect;
    for (const auto& r : records) {
      if (r.value > threshold) expect.push_back(r);
    }
    ASSERT_EQ(kept, expect);

    int window = gen.Int(1, 6);
    auto avg = DaProcess(records, DaConfig{DaMode::kAverage, 0, window});
    ASSERT_EQ(avg.size(), (records.size() + window - 1) / window);
    for (std::size_t w = 0; w < avg.size(); ++w) {
      std::size_t lo = w * window;
      std::size_t hi = std::min(records.size(), lo + window);
      double sum = 0;
      for (std::size_t i = lo; i < hi; ++i) sum += records[i].value;
      EXPECT_DOUBLE_EQ(avg[w].value, sum / static_cast<double>(hi - lo));
      EXPECT_EQ(avg[w].timestamp, records[hi - 1].timestamp);
    }
  }
}

TEST(FunctionsTest, LiftUsesContext) {
  RecordContext ctx{"sound-1", "sound", "dB", 100};
  auto out = Lift(RawValues{{10, 20}}, ctx);
  EXPECT_THAT(out, ElementsAre(CanonicalRecord{"sound-1", "sound", "dB", 10, 100},
                               CanonicalRecord{"sound-1", "sound", "dB", 20, 101}));
  Envelope env(ProtocolKind::kHttpLike, "a", "b");
  env.SetHeader(header::kDeviceId, "d");
  env.SetHeader(header::kFirstTick, "7");
  RecordContext from = ContextFromHeaders(env);
  EXPECT_EQ(from.device_id, "d");
  EXPECT_EQ(from.first_tick, 7);
}

TEST(FunctionsTest, SenmlShape) {
  std::vector<CanonicalRecord> recs = {{"sound-1", "sound", "dB", 60, 4}};
  EXPECT_EQ(EncodeSenml(recs), R"([{"bn":"sound-1","n":"sound","t":4,"u":"dB","v":60.0}])");
  EXPECT_EQ(DecodeSenml(EncodeSenml(recs)), recs);
  EXPECT_THROW(DecodeSenml("{"), Error);
}

TEST(FunctionsTest, SensormlShape) {
  std::vector<CanonicalRecord> recs = {{"a&b", "t", "Cel", 2.5, 9}};
  EXPECT_EQ(EncodeSensorml(recs),
            R"(<Observation device="a&amp;b" quantity="t" uom="Cel" time="9">2.5</Observation>)");
  EXPECT_EQ(DecodeSensorml(EncodeSensorml(recs)), recs);
  EXPECT_THROW(DecodeSensorml("<Observation time=\"1\">x</Observation>"), Error);
}

// Every declared IMC conversion followed by its declared reverse gives back
// the original records; the text codecs are exact on their own.
TEST(ConversionProperty, ImcInverse) {
  FeasibilityTable table = FeasibilityTable::Default();
  Gen gen(77);
  for (int c = 0; c < kCases; ++c) {
    std::vector<CanonicalRecord> recs = gen.Records();
    for (CanonicalRecord& r : recs) r.device_id += gen.Text(5);
    Body raw = Records{recs};
    InfoModelKind mid = gen.Coin() ? InfoModelKind::kSenmlLike : InfoModelKind::kSensormlLike;
    Body there = ImcConvert(raw, mid, table);
    ASSERT_EQ(ModelOf(there), mid);
    Body back = ImcConvert(there, InfoModelKind::kRaw, table);
    ASSERT_EQ(back, raw);
    EXPECT_EQ(DecodeSenml(EncodeSenml(recs)), recs);
    EXPECT_EQ(DecodeSensorml(EncodeSensorml(recs)), recs);
  }
}

TEST(ConversionProperty, RobotCommandInverse) {
  FeasibilityTable table = FeasibilityTable::Default();
  table.DeclareImc({VnfType::kIMC, 6}, InfoModelKind::kRobotCmd, InfoModelKind::kSenmlLike);
  Gen gen(78);
  for (int c = 0; c < kCases; ++c) {
    RobotCommand cmd{gen.Coin() ? "move" : "grab", {}};
    int n = gen.Int(0, 4);
    for (int i = 0; i < n; ++i) cmd.args.push_back(gen.Word() + "=" + gen.Word());
    Body request = ImcConvert(cmd, InfoModelKind::kSenmlLike, table);
    ASSERT_EQ(ImcConvert(request, InfoModelKind::kRobotCmd, table), Body{cmd});
  }
}

TEST(ConversionTest, RobotRequestBecomesCommand) {
  FeasibilityTable table = FeasibilityTable::Default();
  Body cmd = ImcConvert(RobotRequest("/robots/r1/grab", "target=ball&arm=left"),
                        InfoModelKind::kRobotCmd, table);
  EXPECT_EQ(cmd, Body(RobotCommand{"grab", {"target=ball", "arm=left"}}));
  EXPECT_EQ(CodeOf([&] {
              ImcConvert(RobotRequest("/robots/r1/dance", ""), InfoModelKind::kRobotCmd, table);
            }),
            ErrorCode::kInfeasibleConversion);
}

TEST(ConversionTest, UndeclaredPairsAreInfeasible) {
  FeasibilityTable table;
  table.DeclareImc(kImc1, InfoModelKind::kRaw, InfoModelKind::kSenmlLike);
  EXPECT_EQ(CodeOf([&] {
              ImcConvert(Records{{Rec(1)}}, InfoModelKind::kSensormlLike, table);
            }),
            ErrorCode::kInfeasibleConversion);
  Envelope env(ProtocolKind::kCoapLike, "a", "b");
  EXPECT_EQ(CodeOf([&] { PcConvert(env, ProtocolKind::kHttpLike, table); }),
            ErrorCode::kInfeasibleConversion);
  EXPECT_EQ(ImcConvert(Records{{Rec(1)}}, InfoModelKind::kRaw, table), Body(Records{{Rec(1)}}));
}

TEST(ConversionTest, PcRekeysContentFormat) {
  FeasibilityTable table = FeasibilityTable::Default();
  Envelope env(ProtocolKind::kCoapLike, "a", "b", RawValues{{1}});
  env.SetHeader(kCoapContentFormat, "110");
  env.SetHeader(kCoapMethod, "POST");
  env.StampChainId("A");
  Envelope out = PcConvert(env, ProtocolKind::kHttpLike, table);
  EXPECT_EQ(out.protocol(), ProtocolKind::kHttpLike);
  EXPECT_EQ(out.Header(kHttpContentType), "application/senml+json");
  EXPECT_EQ(out.Header(kHttpMethod), "POST");
  EXPECT_EQ(out.Header(kCoapContentFormat), std::nullopt);
  EXPECT_EQ(out.chain_id(), "A");
  EXPECT_EQ(out.body(), env.body());
  // Back again through PC3.
  EXPECT_EQ(PcConvert(out, ProtocolKind::kCoapLike, table), env);

  Envelope http(ProtocolKind::kHttpLike, "a", "b", RawValues{{1}});
  EXPECT_EQ(CodeOf([&] { PcConvert(http, ProtocolKind::kLcpLike, table); }),
            ErrorCode::kInfeasibleConversion);
}

TEST(LbTest, RoundRobinAndErrors) {
  std::vector<VnfInstance> group = {{"DA1-1", kDa1, "h", VnfState::kActive, {}},
                                    {"DA1-2", kDa1, "h", VnfState::kActive, {}}};
  EXPECT_EQ(LbSelect(group, 0), "DA1-1");
  EXPECT_EQ(LbSelect(group, 3), "DA1-2");
  EXPECT_EQ(CodeOf([] { LbSelect({}, 0); }), ErrorCode::kEmptyGroup);
  group.push_back({"IMC1-1", kImc1, "h", VnfState::kActive, {}});
  EXPECT_EQ(CodeOf([&] { LbSelect(group, 0); }), ErrorCode::kInvalidArgument);
}

// After any number of requests the busiest and idlest member differ by at
// most one.
TEST(LbProperty, FairSpread) {
  Gen gen(55);
  for (int c = 0; c < kCases; ++c) {
    int n = gen.Int(1, 9);
    std::vector<VnfInstance> group;
    for (int i = 0; i < n; ++i) {
      group.push_back({"IMC1-" + std::to_string(i + 1), kImc1, "h", VnfState::kActive, {}});
    }
    std::map<std::string, int> hits;
    int requests = gen.Int(0, 200);
    for (int s = 0; s < requests; ++s) ++hits[LbSelect(group, static_cast<std::uint64_t>(s))];
    int lo = requests, hi = 0;
    for (const auto& m : group) {
      lo = std::min(lo, hits[m.instance_id]);
      hi = std::max(hi, hits[m.instance_id]);
    }
    ASSERT_LE(hi - lo, 1) << n << " members, " << requests << " requests";
  }
}

TEST(StoreTest, LookupAndVersions) {
  GatewayFunctionsStore store(FeasibilityTable::Default());
  store.Onboard({kDa1, "1.0", {}});
  store.Onboard({kDa1, "1.2", {}});
  EXPECT_EQ(store.Lookup(kDa1).version, "1.2");
  EXPECT_EQ(CodeOf([&] { store.Onboard({kDa1, "1.0", {}}); }), ErrorCode::kDuplicatePackage);
  EXPECT_EQ(CodeOf([&] { store.Lookup(kPc1); }), ErrorCode::kFunctionUnavailable);
  store.Onboard({{VnfType::kIMC, 9}, "1.0", {}});
  EXPECT_EQ(CodeOf([&] { store.Lookup({VnfType::kIMC, 9}); }),
            ErrorCode::kFunctionUnavailable);
  EXPECT_EQ(store.Remove(kDa1), 2u);
  EXPECT_FALSE(store.Contains(kDa1));

  GatewayFunctionsStore full = DefaultStore();
  EXPECT_EQ(full.LookupPc(ProtocolKind::kCoapLike, ProtocolKind::kHttpLike).kind, kPc1);
  EXPECT_EQ(full.LookupImc(InfoModelKind::kSenmlLike, InfoModelKind::kRobotCmd).kind, kImc3);
  EXPECT_TRUE(full.Contains(kLb1));
}

TEST(ManagerTest, CapacityAndClasses) {
  DeviceDescriptor sensor{"s1", DeviceClass::kA, {}, {}, std::string("h1")};
  VnfManager m({Host("h1", 1), sensor});
  VnfInstance a = m.Instantiate(Pkg(kDa1), "h1", DaConfig{DaMode::kAverage, 0, 5});
  EXPECT_EQ(a.instance_id, "DA1-1");
  EXPECT_EQ(a.state, VnfState::kActive);
  EXPECT_EQ(m.FreeCapacity("h1"), 0);
  EXPECT_EQ(CodeOf([&] { m.Instantiate(Pkg(kImc1), "h1"); }), ErrorCode::kHostFull);
  EXPECT_EQ(CodeOf([&] { m.Instantiate(Pkg(kImc1), "s1"); }), ErrorCode::kHostNotCapable);
  EXPECT_EQ(CodeOf([&] { m.Instantiate(Pkg(kImc1), "nope"); }), ErrorCode::kUnknownHost);
  m.Terminate("DA1-1");
  EXPECT_FALSE(m.IsLive("DA1-1"));
  EXPECT_EQ(m.Instance("DA1-1")->state, VnfState::kTerminated);
  EXPECT_EQ(CodeOf([&] { m.Terminate("DA1-1"); }), ErrorCode::kUnknownInstance);
  EXPECT_EQ(m.FreeCapacity("h1"), 1);
  EXPECT_EQ(m.Instantiate(Pkg(kDa1), "h1").instance_id, "DA1-2");
}

TEST(ManagerTest, CatalogueFindsByConfig) {
  VnfManager m({Host("h1", 4)});
  DaConfig avg{DaMode::kAverage, 0, 5};
  DaConfig thr{DaMode::kThreshold, 50, 1};
  m.Instantiate(Pkg(kDa1), "h1", thr);
  m.Instantiate(Pkg(kDa1), "h1", avg);
  VnfConfig want = avg;
  EXPECT_EQ(m.CatalogueCheck(kDa1, &want)->instance_id, "DA1-2");
  EXPECT_EQ(m.CatalogueCheck(kDa1)->instance_id, "DA1-1");
  EXPECT_EQ(m.CatalogueCheck(kImc1), std::nullopt);
  EXPECT_EQ(m.catalogue().ByHost("h1").size(), 2u);
  EXPECT_EQ(CodeOf([&] { m.Instantiate(Pkg(kImc1), "h1", DaConfig{}); }),
            ErrorCode::kInvalidArgument);
}

// Replaying the lifecycle log on a fresh manager reproduces the catalogue
// and host usage of the original, whatever the operation order.
TEST(CatalogueProperty, LogReplayEquivalence) {
  Gen gen(99);
  const std::vector<VnfKind> kinds = {kDa1, kImc1, kImc3, kPc1, kPc2};
  for (int c = 0; c < kCases; ++c) {
    std::vector<DeviceDescriptor> hosts = {Host("h1", gen.Int(0, 3)), Host("h2", gen.Int(0, 3)),
                                           Host("h3", gen.Int(0, 3))};
    VnfManager m(hosts);
    int ops = gen.Int(1, 25);
    for (int i = 0; i < ops; ++i) {
      auto live = m.catalogue().All();
      if (!live.empty() && gen.Int(0, 2) == 0) {
        m.Terminate(gen.Pick(live).instance_id);
        continue;
      }
      try {
        m.Instantiate(Pkg(gen.Pick(kinds)), gen.Pick(hosts).id);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kHostFull);
      }
    }
    VnfManager replay(hosts);
    for (const LifecycleOp& op : m.log()) {
      if (op.kind == LifecycleOp::Kind::kInstantiate) {
        ASSERT_EQ(replay.Instantiate(Pkg(op.vnf_kind), op.host).instance_id, op.instance_id);
      } else {
        replay.Terminate(op.instance_id);
      }
    }
    ASSERT_EQ(replay.catalogue().All(), m.catalogue().All());
    for (const auto& h : hosts) ASSERT_EQ(replay.FreeCapacity(h.id), m.FreeCapacity(h.id));
  }
}

class RuntimeTest : public ::testing::Test {
 protected:
  RuntimeTest() : manager_({Host("h1", 8)}), runtime_(manager_, table_) {}

  Envelope Sensor(std::vector<double> values) {
    Envelope env(ProtocolKind::kCoapLike, "app", "sensor-a", RawValues{std::move(values)});
    env.SetHeader(header::kDeviceId, "sensor-a");
    env.SetHeader(header::kQuantity, "temperature");
    env.SetHeader(header::kUnit, "Cel");
    env.SetHeader(kCoapContentFormat, "0");
    return env;
  }

  FeasibilityTable table_ = FeasibilityTable::Default();
  VnfManager manager_;
  VnfRuntime runtime_;
};

TEST_F(RuntimeTest, ChainAEndToEnd) {
  auto da = manager_.Instantiate(Pkg(kDa1), "h1", DaConfig{DaMode::kAverage, 0, 5});
  auto imc = manager_.Instantiate(Pkg(kImc1), "h1");
  auto pc = manager_.Instantiate(Pkg(kPc1), "h1");
  VnfOutput a = runtime_.Invoke(da.instance_id, Sensor({38, 42, 46, 50, 54}));
  EXPECT_EQ(a.records, 5u);
  VnfOutput b = runtime_.Invoke(imc.instance_id, *a.envelope);
  EXPECT_EQ(b.records, 1u);
  VnfOutput c = runtime_.Invoke(pc.instance_id, *b.envelope);
  const Envelope& out = *c.envelope;
  EXPECT_EQ(out.protocol(), ProtocolKind::kHttpLike);
  EXPECT_EQ(out.Header(kHttpContentType), "application/senml+json");
  auto recs = RecordsOf(out.body(), {});
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].value, 46);
  EXPECT_EQ(recs[0].device_id, "sensor-a");
  EXPECT_EQ(runtime_.Invocations(da.instance_id), 5u);
  EXPECT_EQ(runtime_.Invocations(imc.instance_id), 1u);
}

TEST_F(RuntimeTest, ThresholdCanConsume) {
  auto da = manager_.Instantiate(Pkg(kDa1), "h1", DaConfig{DaMode::kThreshold, 100, 1});
  VnfOutput out = runtime_.Invoke(da.instance_id, Sensor({1, 2}));
  EXPECT_FALSE(out.envelope.has_value());
  EXPECT_EQ(out.records, 2u);
}

TEST_F(RuntimeTest, WrongInputIsInfeasible) {
  auto pc = manager_.Instantiate(Pkg(kPc2), "h1");
  EXPECT_EQ(CodeOf([&] { runtime_.Invoke(pc.instance_id, Sensor({1})); }),
            ErrorCode::kInfeasibleConversion);
  EXPECT_EQ(CodeOf([&] { runtime_.Invoke("IMC7-1", Sensor({1})); }), ErrorCode::kNoVnfAtHop);
}

TEST_F(RuntimeTest, BalancerDelegatesRoundRobin) {
  auto m1 = manager_.Instantiate(Pkg(kImc1), "h1");
  auto m2 = manager_.Instantiate(Pkg(kImc1), "h1");
  auto lb = manager_.Instantiate(Pkg(kLb1), "h1", LbConfig{kImc1, {m1.instance_id, m2.instance_id}});
  std::vector<std::string> chosen;
  for (int i = 0; i < 4; ++i) {
    VnfOutput out = runtime_.Invoke(lb.instance_id, Sensor({1, 2, 3}));
    ASSERT_EQ(out.delegated_to.size(), 1u);
    chosen.push_back(out.delegated_to.front());
    EXPECT_EQ(out.records, 3u);
  }
  EXPECT_THAT(chosen, ElementsAre("IMC1-1", "IMC1-2", "IMC1-1", "IMC1-2"));
  EXPECT_EQ(runtime_.Invocations(lb.instance_id), 4u);
  manager_.Terminate(m1.instance_id);
  manager_.Terminate(m2.instance_id);
  EXPECT_EQ(CodeOf([&] { runtime_.Invoke(lb.instance_id, Sensor({1})); }),
            ErrorCode::kEmptyGroup);
}

}  // namespace
}  // namespace iotgw::vnf
