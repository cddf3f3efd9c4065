// Copyright 2026 The spir-graph Authors
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

#include <vector>

#include "gtest/gtest.h"
#include "spir/schemes.h"
#include "spir/srp.h"
#include "test_util.h"

namespace spir {
namespace {

using ::spir::testing::Forms;
using ::spir::testing::PlanDecodes;
using Strings = std::vector<std::string>;

TEST(PathPirTest, ThreeServerPattern) {
  const SchemeFamily f = *PathPirFamily(3);
  EXPECT_EQ(f.symbols_per_message(), 2);
  EXPECT_EQ(f.randomness_count(), 0);
  EXPECT_EQ(f.shape().base_downloads, 3);
  EXPECT_EQ(f.shape().choice_radices, std::vector<int>{2});
  const SchemeInstance t1 = *f.Canonical(1, std::vector<int>{1});
  EXPECT_EQ(Forms(t1, 1), Strings{"a1"});
  EXPECT_EQ(Forms(t1, 2), Strings{"a2+b2"});
  EXPECT_EQ(Forms(t1, 3), Strings{"b2"});
  const SchemeInstance t2 = *f.Canonical(2, std::vector<int>{0});
  EXPECT_EQ(Forms(t2, 1), Strings{"a1"});
  EXPECT_EQ(Forms(t2, 2), Strings{"a1+b1"});
  EXPECT_EQ(Forms(t2, 3), Strings{"b2"});
}

TEST(PathPirTest, FourServerPatternFollowsChoices) {
  const SchemeFamily f = *PathPirFamily(4);
  const SchemeInstance t2 = *f.Canonical(2, std::vector<int>{0, 1});
  EXPECT_EQ(Forms(t2, 1), Strings{"a1"});
  EXPECT_EQ(Forms(t2, 2), Strings{"a1+b1"});
  EXPECT_EQ(Forms(t2, 3), Strings{"b2+c2"});
  EXPECT_EQ(Forms(t2, 4), Strings{"c2"});
}

TEST(PathPirTest, EveryInstanceIsLocalAndDecodes) {
  for (int n = 3; n <= 8; ++n) {
    const SchemeFamily f = *PathPirFamily(n);
    EXPECT_EQ(f.message_count(), n - 1);
    const RealizationSpace& space = f.space();
    for (MessageId theta = 1; theta <= f.message_count(); ++theta) {
      for (std::uint64_t c = 0; c < space.choice_count(); ++c) {
        const SchemeInstance inst =
            *f.Canonical(theta, space.ChoiceDigits(c));
        EXPECT_TRUE(CheckLocality(inst).ok());
        EXPECT_EQ(inst.DownloadCount(), static_cast<std::size_t>(n));
        EXPECT_TRUE(PlanDecodes(inst)) << "N=" << n << " theta=" << theta;
      }
    }
  }
  EXPECT_FALSE(PathPirFamily(2).ok());
}

TEST(PathPirTest, GenerateRelabelsTheCanonicalInstance) {
  const SchemeFamily f = *PathPirFamily(4);
  const RealizationSpace& space = f.space();
  for (RealizationId id : {RealizationId(0), RealizationId(5),
                           RealizationId(17), RealizationId(space.size() - 1)}) {
    const UserRealization r = *space.Unrank(id);
    const SchemeInstance direct = *f.Generate(2, id);
    const SchemeInstance expected =
        Relabel(*f.Canonical(2, r.choices), r);
    EXPECT_EQ(direct.answers, expected.answers);
    EXPECT_EQ(direct.realization_id, id);
    EXPECT_TRUE(PlanDecodes(direct));
  }
  EXPECT_FALSE(f.Generate(0, RealizationId(0)).ok());
  EXPECT_FALSE(f.Generate(1, space.size()).ok());
}

TEST(Cycle3PirTest, ThetaOnePattern) {
  const SchemeFamily f = *Cycle3PirFamily();
  EXPECT_EQ(f.symbols_per_message(), 6);
  EXPECT_EQ(f.shape().base_downloads, 12);
  const SchemeInstance inst = *f.Canonical(1, std::vector<int>{});
  EXPECT_EQ(Forms(inst, 1), (Strings{"a1", "c1", "a2+c2", "a3+c3"}));
  EXPECT_EQ(Forms(inst, 2), (Strings{"a4", "b1", "a5+b2", "a6+b3"}));
  EXPECT_EQ(Forms(inst, 3), (Strings{"b2", "c2", "b1+c3", "b3+c1"}));
  EXPECT_TRUE(PlanDecodes(inst));
  // Half of W_1 from each storing server.
  EXPECT_EQ(DesiredSymbolsFromServer(inst, 1), 3);
  EXPECT_EQ(DesiredSymbolsFromServer(inst, 2), 3);
  EXPECT_EQ(DesiredSymbolsFromServer(inst, 3), 0);
}

TEST(Cycle3PirTest, AllThetasDecode) {
  const SchemeFamily f = *Cycle3PirFamily();
  for (MessageId theta = 1; theta <= 3; ++theta) {
    const SchemeInstance inst = *f.Canonical(theta, std::vector<int>{});
    EXPECT_TRUE(CheckLocality(inst).ok());
    EXPECT_EQ(inst.DownloadCount(), 12u);
    EXPECT_TRUE(PlanDecodes(inst)) << "theta=" << theta;
  }
}

TEST(P3CapacityTest, AnswerRows) {
  const SchemeFamily f = *P3CapacityFamily();
  EXPECT_EQ(f.symbols_per_message(), 2);
  EXPECT_EQ(f.randomness_count(), 2);
  EXPECT_EQ(f.space().size(), BigInt(8));
  const SchemeInstance t1 = *f.Canonical(1, std::vector<int>{});
  EXPECT_EQ(Forms(t1, 1), Strings{"a1+s1"});
  EXPECT_EQ(Forms(t1, 2), (Strings{"s1", "a2+b2+s2"}));
  EXPECT_EQ(Forms(t1, 3), Strings{"b2+s2"});
  const SchemeInstance t2 = *f.Canonical(2, std::vector<int>{});
  EXPECT_EQ(Forms(t2, 1), Strings{"a1+s1"});
  EXPECT_EQ(Forms(t2, 2), (Strings{"s2", "a1+b1+s1"}));
  EXPECT_EQ(Forms(t2, 3), Strings{"b2+s2"});
  // a1 = (a1+s1) - s1.
  EXPECT_EQ(t1.decode_plan[0], (std::vector<std::int64_t>{1, -1, 0, 0}));
  EXPECT_TRUE(PlanDecodes(t1));
  EXPECT_TRUE(PlanDecodes(t2));
}

TEST(P3CapacityTest, DecodesOverLargerFields) {
  const SchemeFamily f = *P3CapacityFamily(*PrimeField::Create(7));
  for (RealizationId id = 0; id < f.space().size(); ++id) {
    for (MessageId theta : {1, 2}) {
      EXPECT_TRUE(PlanDecodes(*f.Generate(theta, id)));
    }
  }
}

TEST(PeelingDecodePlanTest, FailsWithoutSideInformation) {
  SchemeInstance inst = *PathPirFamily(3)->Canonical(1, std::vector<int>{0});
  ASSERT_TRUE(PeelingDecodePlan(inst).has_value());
  inst.answers[2].clear();  // server 3 no longer reveals b1
  EXPECT_FALSE(PeelingDecodePlan(inst).has_value());
}

TEST(SrpTest, PathFamiliesRetrieveOneSymbolPerServer) {
  for (int n = 3; n <= 8; ++n) {
    const SrpReport report = *CheckSrp(*PathPirFamily(n));
    EXPECT_TRUE(report.pass) << "N=" << n << ": " << report.witness;
    EXPECT_EQ(report.expected, 1);
    EXPECT_EQ(report.coverage, Coverage::kEnumerated);
    ASSERT_EQ(report.counts.size(), 2u * (n - 1));
    for (const SrpCount& c : report.counts) EXPECT_EQ(c.count, 1);
  }
}

TEST(SrpTest, Cycle3RetrievesThreeSymbolsPerServer) {
  const SrpReport report = *CheckSrp(*Cycle3PirFamily());
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.expected, 3);
  for (const SrpCount& c : report.counts) EXPECT_EQ(c.count, 3);
}

// PIR on the 3-path that takes both symbols of the desired message from one
// server: reliable, but (2, 0) instead of (1, 1).
SchemeFamily LopsidedFamily() {
  const Graph g = *Graph::Build(GraphKind::kPath, 3);
  SchemeFamily::Shape shape{.symbols_per_message = 2,
                            .randomness_count = 0,
                            .base_symbols = 2,
                            .base_downloads = 2};
  auto builder = [g](MessageId theta,
                     std::span<const int>) -> absl::StatusOr<SchemeInstance> {
    SchemeInstance inst;
    inst.graph = g;
    inst.theta = theta;
    inst.symbols_per_message = 2;
    inst.answers.resize(3);
    const ServerId at = theta == 1 ? 1 : 3;
    for (int l = 1; l <= 2; ++l) {
      inst.answers[at - 1].push_back(
          {LinearForm{SymbolRef::Message(theta, l)}, 1});
    }
    inst.decode_plan = {{1, 0}, {0, 1}};
    return inst;
  };
  return SchemeFamily("lopsided", g, PrimeField::Binary(), shape, builder);
}

TEST(SrpTest, LopsidedRetrievalFails) {
  const SrpReport report = *CheckSrp(LopsidedFamily());
  EXPECT_FALSE(report.pass);
  EXPECT_NE(report.witness.find("gives 2"), std::string::npos)
      << report.witness;
  EXPECT_NE(report.witness.find("gives 0"), std::string::npos);
}

TEST(SrpTest, RejectsFamiliesWithRandomness) {
  EXPECT_FALSE(CheckSrp(*P3CapacityFamily()).ok());
}

}  // namespace
}  // namespace spir
