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

#include "spir/srp.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spir {

int DesiredSymbolsFromServer(const SchemeInstance& instance, ServerId server) {
  const std::vector<std::size_t> rows = instance.ServerFormIndices(server);
  const std::vector<std::size_t> cols =
      SourceLayout::Of(instance).MessageColumns(instance.theta);
  return static_cast<int>(
      CoefficientMatrix(instance).SelectRows(rows).SelectColumns(cols).Rank());
}

absl::StatusOr<SrpReport> CheckSrp(const SchemeFamily& family,
                                   std::uint64_t limit, std::uint64_t seed) {
  if (family.randomness_count() != 0) {
    return absl::FailedPreconditionError(
        absl::StrCat(family.name(), " has |R| = ", family.randomness_count(),
                     "; SRP applies to PIR families"));
  }
  const int base = family.shape().base_symbols;
  SrpReport report;
  report.expected = base / 2;
  if (base % 2 != 0) {
    report.witness = absl::StrCat("L' = ", base, " is odd");
    return report;
  }
  const RealizationSpace& space = family.space();
  RealizationSequence seq =
      space.size() <= limit ? EnumerateRealizations(space, limit, seed)
      : space.choice_count() <= limit
          ? OrbitRepresentatives(space)
          : SampleRealizations(space, limit, seed);
  report.coverage = seq.coverage();
  report.pass = true;
  for (MessageId theta = 1; theta <= family.message_count(); ++theta) {
    const auto [i, j] = family.graph().ServersOf(theta);
    for (std::uint64_t t = 0; t < seq.size(); ++t) {
      absl::StatusOr<SchemeInstance> inst = family.Generate(theta, seq.At(t));
      if (!inst.ok()) return inst.status();
      const int ci = DesiredSymbolsFromServer(*inst, i);
      const int cj = DesiredSymbolsFromServer(*inst, j);
      if (t == 0) {
        report.counts.push_back({theta, i, ci});
        report.counts.push_back({theta, j, cj});
      }
      if (ci != report.expected || cj != report.expected) {
        report.pass = false;
        report.witness = absl::StrCat(
            "theta=", theta, " realization=", seq.At(t).str(), ": server ", i,
            " gives ", ci, ", server ", j, " gives ", cj, ", expected ",
            report.expected, " each");
        return report;
      }
    }
  }
  return report;
}

}  // namespace spir
