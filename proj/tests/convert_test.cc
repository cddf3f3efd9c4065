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

#include <map>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "spir/convert.h"
#include "spir/schemes.h"
#include "test_util.h"

namespace spir {
namespace {

using ::spir::testing::EditedFamily;
using ::spir::testing::Forms;
using ::spir::testing::ParseForm;
using ::spir::testing::PlanDecodes;
using Strings = std::vector<std::string>;

TEST(ConversionParamsTest, KnownExamples) {
  const ConversionParams p = *ComputeConversionParams(2, 3, 2);
  EXPECT_EQ(p.lcm, 2);
  EXPECT_EQ(p.repetitions, 2);
  EXPECT_EQ(p.pool_size, 1);
  EXPECT_EQ(p.symbols_per_message, 4);
  EXPECT_EQ(p.randomness_count, 5);
  const ConversionParams c = *ComputeConversionParams(6, 3, 3);
  EXPECT_EQ(c.lcm, 6);
  EXPECT_EQ(c.repetitions, 2);
  EXPECT_EQ(c.pool_size, 3);
  EXPECT_EQ(c.symbols_per_message, 12);
  EXPECT_EQ(c.randomness_count, 21);
  const ConversionParams five = *ComputeConversionParams(2, 5, 4);
  EXPECT_EQ(five.repetitions, 4);
  EXPECT_EQ(five.pool_size, 1);
  EXPECT_EQ(five.symbols_per_message, 8);
  EXPECT_EQ(five.randomness_count, 17);
}

TEST(ConversionParamsTest, FourServerPathUsesThreeRepetitions) {
  const ConversionParams p = *ComputeConversionParams(2, 4, 3);
  EXPECT_EQ(p.repetitions, 3);
  EXPECT_EQ(p.pool_size, 1);
  EXPECT_EQ(p.symbols_per_message, 6);
  EXPECT_EQ(p.randomness_count, 10);
}

TEST(ConversionParamsTest, MatchesSmallestSolutionSearch) {
  for (int base = 2; base <= 12; base += 2) {
    for (int n = 2; n <= 12; ++n) {
      // Smallest x >= 1 for which x * L'/2 is a multiple of N - 1.
      int x = 1;
      while ((x * base / 2) % (n - 1) != 0) ++x;
      const int y = x * base / 2 / (n - 1);
      const ConversionParams p = *ComputeConversionParams(base, n, n);
      EXPECT_EQ(p.repetitions, x) << base << " " << n;
      EXPECT_EQ(p.pool_size, y) << base << " " << n;
      EXPECT_EQ(p.repetitions * base / 2, (n - 1) * p.pool_size);
      EXPECT_EQ(p.randomness_count, n * y + (n - 1) * x * base / 2);
    }
  }
}

TEST(ConversionParamsTest, RejectsBadInput) {
  EXPECT_FALSE(ComputeConversionParams(3, 3, 2).ok());
  EXPECT_FALSE(ComputeConversionParams(0, 3, 2).ok());
  EXPECT_FALSE(ComputeConversionParams(2, 1, 2).ok());
  EXPECT_FALSE(ComputeConversionParams(2, 3, 0).ok());
}

SchemeFamily Converted(absl::StatusOr<SchemeFamily> base) {
  return *ConvertPirToSpir(*base);
}

TEST(ConvertTest, ThreePathThetaOneTable) {
  const SchemeFamily f = Converted(PathPirFamily(3));
  const SchemeInstance inst = *f.Canonical(1, std::vector<int>{1, 1});
  EXPECT_EQ(Forms(inst, 1), (Strings{"s2", "a1+s1", "a3+s4"}));
  EXPECT_EQ(Forms(inst, 2), (Strings{"s1", "a2+b2+s2+s3", "a4+b4+s4+s5"}));
  EXPECT_EQ(Forms(inst, 3), (Strings{"s4", "b2+s3", "b4+s5"}));
  EXPECT_TRUE(PlanDecodes(inst));
}

TEST(ConvertTest, ThreePathThetaTwoTable) {
  const SchemeFamily f = Converted(PathPirFamily(3));
  const SchemeInstance inst = *f.Canonical(2, std::vector<int>{0, 0});
  EXPECT_EQ(Forms(inst, 1), (Strings{"s5", "a1+s1", "a3+s4"}));
  EXPECT_EQ(Forms(inst, 2), (Strings{"s3", "a1+b1+s1+s2", "a3+b3+s4+s5"}));
  // s2 masks b1 at server 2, so server 3 must return s2 for b1 to decode.
  EXPECT_EQ(Forms(inst, 3), (Strings{"s2", "b2+s3", "b4+s5"}));
  EXPECT_TRUE(PlanDecodes(inst));
  SchemeInstance with_s1 = inst;
  with_s1.answers[2][0].form = ParseForm("s1");
  EXPECT_FALSE(PlanDecodes(with_s1));
}

TEST(ConvertTest, CycleThetaOneTable) {
  const SchemeFamily f = Converted(Cycle3PirFamily());
  const SchemeInstance inst = *f.Canonical(1, std::vector<int>{});
  // Transcribed row by row; raw downloads first.
  const std::vector<Strings> expected = {
      {"s7", "s9", "s11", "a1+s1", "c1+s2", "a2+c2+s3+s4", "a3+c3+s5+s6",
       "a7+s13", "c7+s14", "a8+c8+s15+s16", "a9+c9+s17+s18"},
      {"s1", "s3", "s5", "a4+s7", "b1+s8", "a5+b2+s9+s10", "a6+b3+s11+s12",
       "a10+s13", "b7+s19", "a11+b8+s15+s20", "a12+b9+s17+s21"},
      {"s13", "s15", "s17", "b2+s10", "c2+s4", "b1+c3+s8+s6", "b3+c1+s12+s2",
       "b8+s20", "c8+s16", "b7+c9+s19+s18", "b9+c7+s14+s21"}};
  for (ServerId n = 1; n <= 3; ++n) {
    ASSERT_EQ(inst.answers[n - 1].size(), expected[n - 1].size());
    for (std::size_t i = 0; i < expected[n - 1].size(); ++i) {
      EXPECT_EQ(inst.answers[n - 1][i].form, ParseForm(expected[n - 1][i]))
          << "server " << n << " form " << i;
    }
  }
  EXPECT_TRUE(PlanDecodes(inst));
}

// Masks of every message-symbol occurrence: randomness index -> list of
// (server, symbol).
std::map<int, std::vector<std::pair<ServerId, SymbolRef>>> MaskUses(
    const SchemeInstance& inst) {
  std::map<int, std::vector<std::pair<ServerId, SymbolRef>>> uses;
  for (ServerId n = 1; n <= inst.graph.server_count(); ++n) {
    for (const AnswerForm& af : inst.answers[n - 1]) {
      if (af.round == 0) continue;
      const LinearForm msg = af.form.MessagePart();
      const LinearForm rnd = af.form.RandomnessPart();
      EXPECT_EQ(msg.size(), rnd.size()) << af.form.ToString();
      for (std::size_t t = 0; t < msg.size(); ++t) {
        uses[rnd.terms()[t].symbol.index].emplace_back(n,
                                                       msg.terms()[t].symbol);
      }
    }
  }
  return uses;
}

void CheckMaskAccounting(const SchemeFamily& base, const SchemeInstance& inst,
                         const ConversionParams& p) {
  const Graph& g = inst.graph;
  const auto [si, sj] = g.ServersOf(inst.theta);
  std::set<int> raw;
  for (ServerId n = 1; n <= g.server_count(); ++n) {
    int count = 0;
    for (const AnswerForm& af : inst.answers[n - 1]) {
      if (af.round != 0) continue;
      ++count;
      ASSERT_EQ(af.form.size(), 1u);
      ASSERT_TRUE(af.form.terms()[0].symbol.is_randomness());
      EXPECT_TRUE(raw.insert(af.form.terms()[0].symbol.index).second);
    }
    EXPECT_EQ(count, p.pool_size);
  }
  const auto uses = MaskUses(inst);
  int undesired = 0;
  std::set<int> used;
  for (const auto& [mask, list] : uses) {
    used.insert(mask);
    std::set<SymbolRef> symbols;
    for (const auto& [server, symbol] : list) symbols.insert(symbol);
    const SymbolRef first = list.front().second;
    if (first.message != inst.theta) {
      // One undesired symbol, masked identically at both of its servers.
      ++undesired;
      EXPECT_EQ(symbols.size(), 1u);
      EXPECT_EQ(list.size(), 2u);
      EXPECT_FALSE(raw.contains(mask));
      const auto [a, b] = g.ServersOf(first.message);
      EXPECT_EQ((std::set<ServerId>{list[0].first, list[1].first}),
                (std::set<ServerId>{a, b}));
    } else {
      // A pool symbol: one desired symbol, or one at each storing server.
      EXPECT_TRUE(raw.contains(mask));
      for (const auto& [server, symbol] : list) {
        EXPECT_EQ(symbol.message, inst.theta);
      }
      ASSERT_LE(list.size(), 2u);
      if (list.size() == 2) {
        EXPECT_EQ((std::set<ServerId>{list[0].first, list[1].first}),
                  (std::set<ServerId>{si, sj}));
      }
    }
  }
  EXPECT_EQ(undesired,
            (base.message_count() - 1) * p.symbols_per_message / 2);
  for (int s = 1; s <= p.randomness_count; ++s) {
    EXPECT_TRUE(used.contains(s) || raw.contains(s)) << "s" << s << " unused";
  }
  EXPECT_EQ(static_cast<int>(raw.size()), g.server_count() * p.pool_size);
}

TEST(ConvertTest, MaskAccountingAndDecoding) {
  std::vector<SchemeFamily> bases = {*PathPirFamily(3), *PathPirFamily(4),
                                     *PathPirFamily(5), *PathPirFamily(6),
                                     *Cycle3PirFamily()};
  for (const SchemeFamily& base : bases) {
    const SchemeFamily spir = *ConvertPirToSpir(base);
    const ConversionParams p = *ComputeConversionParams(
        base.symbols_per_message(), base.graph().server_count(),
        base.message_count());
    const RealizationSpace& space = spir.space();
    const std::uint64_t choices =
        std::min<std::uint64_t>(16, static_cast<std::uint64_t>(
                                        space.choice_count()));
    for (MessageId theta = 1; theta <= spir.message_count(); ++theta) {
      for (std::uint64_t c = 0; c < choices; ++c) {
        const SchemeInstance inst =
            *spir.Canonical(theta, space.ChoiceDigits(c));
        SCOPED_TRACE(spir.name() + " theta=" + std::to_string(theta));
        EXPECT_TRUE(CheckLocality(inst).ok());
        EXPECT_TRUE(PlanDecodes(inst));
        EXPECT_EQ(inst.DownloadCount(),
                  static_cast<std::size_t>(base.shape().base_downloads *
                                               p.repetitions +
                                           base.graph().server_count() *
                                               p.pool_size));
        CheckMaskAccounting(base, inst, p);
      }
    }
  }
}

TEST(ConvertTest, StrippingRandomnessRecoversTheBaseRepetitions) {
  const SchemeFamily base = *PathPirFamily(4);
  const SchemeFamily spir = *ConvertPirToSpir(base);
  const std::vector<int> choices = {0, 1, 1, 0, 1, 1};
  const SchemeInstance inst = *spir.Canonical(2, choices);
  for (int u = 0; u < 3; ++u) {
    const SchemeInstance rep = *base.Canonical(
        2, std::span<const int>(choices).subspan(2 * u, 2));
    for (ServerId n = 1; n <= 4; ++n) {
      std::vector<LinearForm> stripped;
      for (const AnswerForm& af : inst.answers[n - 1]) {
        if (af.round == u + 1) stripped.push_back(af.form.MessagePart());
      }
      std::vector<LinearForm> shifted;
      for (const AnswerForm& af : rep.answers[n - 1]) {
        shifted.push_back(af.form.Mapped([u](const SymbolRef& s) {
          return SymbolRef::Message(s.message, s.index + 2 * u);
        }));
      }
      EXPECT_EQ(stripped, shifted) << "rep " << u + 1 << " server " << n;
    }
  }
}

TEST(ConvertTest, RejectsRandomizedOrNonSymmetricInput) {
  EXPECT_FALSE(ConvertPirToSpir(*P3CapacityFamily()).ok());
  // Server 2 drops b's symbol for theta=1, so W_1 comes only from server 1.
  const SchemeFamily lopsided = EditedFamily(
      *PathPirFamily(3), "lopsided", [](MessageId theta, SchemeInstance& i) {
        if (theta == 1) {
          i.answers[1].clear();
          i.answers[0].push_back({ParseForm("a2"), 1});
        }
      });
  EXPECT_FALSE(ConvertPirToSpir(lopsided).ok());
}

TEST(SchemeStatsTest, KnownRates) {
  const SchemeStats ex1 = *ComputeSchemeStats(Converted(PathPirFamily(3)));
  EXPECT_EQ(ex1.symbols_per_message, 4);
  EXPECT_EQ(ex1.downloads, 9u);
  EXPECT_EQ(ex1.rate, Rational(4, 9));
  EXPECT_EQ(ex1.rho, Rational(5, 4));
  const SchemeStats ex2 = *ComputeSchemeStats(Converted(Cycle3PirFamily()));
  EXPECT_EQ(ex2.downloads, 33u);
  EXPECT_EQ(ex2.rate, Rational(4, 11));
  EXPECT_EQ(ex2.rho, Rational(7, 4));
  const SchemeStats cap = *ComputeSchemeStats(*P3CapacityFamily());
  EXPECT_EQ(cap.rate, Rational(1, 2));
  EXPECT_EQ(cap.rho, Rational(1));
  const SchemeStats four = *ComputeSchemeStats(Converted(PathPirFamily(4)));
  EXPECT_EQ(four.downloads, 16u);
  EXPECT_EQ(four.rate, Rational(3, 8));
  EXPECT_EQ(four.rho, Rational(5, 3));
}

TEST(SchemeStatsTest, ThetaDependentDownloadIsAnError) {
  const SchemeFamily padded = EditedFamily(
      *P3CapacityFamily(), "padded", [](MessageId theta, SchemeInstance& i) {
        if (theta == 2) i.answers[0].push_back({ParseForm("s1"), 1});
      });
  EXPECT_FALSE(ComputeSchemeStats(padded).ok());
}

}  // namespace
}  // namespace spir
