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

#ifndef SPIR_SRP_H_
#define SPIR_SRP_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "spir/realization.h"
#include "spir/scheme.h"

namespace spir {

// Number of W_theta symbols server `server` contributes given its other
// stored messages: the rank of its forms restricted to the W_theta columns.
struct SrpCount {
  MessageId theta;
  ServerId server;
  int count;
};

struct SrpReport {
  bool pass = false;
  Coverage coverage = Coverage::kEnumerated;
  int expected = 0;  // L'/2
  // Counts observed on the first visited realization of each theta.
  std::vector<SrpCount> counts;
  std::string witness;  // set on failure
};

int DesiredSymbolsFromServer(const SchemeInstance& instance, ServerId server);

// Checks the symmetric retrieval property on a PIR family (no randomness):
// both servers storing W_theta contribute exactly L'/2 desired symbols, for
// every theta and realization. The counts are rank quantities, so when the
// realization space exceeds `limit` the identity-permutation representatives
// are checked instead (exact); if even those exceed `limit`, a seeded sample.
absl::StatusOr<SrpReport> CheckSrp(const SchemeFamily& family,
                                   std::uint64_t limit = 1'000'000,
                                   std::uint64_t seed = 0);

}  // namespace spir

#endif  // SPIR_SRP_H_
