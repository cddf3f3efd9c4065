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

#ifndef SPIR_CAPACITY_H_
#define SPIR_CAPACITY_H_

#include <optional>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "spir/graph.h"
#include "spir/rational.h"

namespace spir {

// Rate of the converted base PIR scheme: 2/(N + N/(N-1)) on paths and
// 2/(N + 1 + N/(N-1)) on cycles. Requires N >= 3.
absl::StatusOr<Rational> AchievableRate(GraphKind kind, int server_count);

struct RateRho {
  Rational rate;
  Rational rho;
};

// Rate L'x / (D'x + Ny) and randomness ratio (K-1)/2 + Ny/(L'x) of the
// conversion applied to a PIR scheme with L' symbols and D' downloads.
absl::StatusOr<RateRho> GeneralRateRho(int base_symbols, int base_downloads,
                                       int server_count, int message_count);

// PIR capacity of the graph-replicated storage: 2/N (path), 2/(N+1) (cycle).
absl::StatusOr<Rational> PirCapacity(GraphKind kind, int server_count);

// Converse bound: 2/(N + 2/(N-1)) (path), 2/(N + 1 + 1/(N-1)) (cycle).
absl::StatusOr<Rational> UpperBound(GraphKind kind, int server_count);

// SPIR capacity when the randomness is itself graph-replicated: 1/N.
absl::StatusOr<Rational> GraphReplicatedCapacity(GraphKind kind,
                                                 int server_count);

struct BoundSet {
  GraphKind kind = GraphKind::kPath;
  int server_count = 0;
  Rational graph_replicated;
  // Best known achievable rate. On the three-server path the dedicated
  // scheme reaches 1/2; elsewhere this is the conversion rate.
  Rational lower;
  Rational conversion_rate;
  Rational upper;
  Rational pir_capacity;
  std::optional<Rational> rho_lower_bound;  // known only for the 3-path

  nlohmann::json ToJson() const;
};

absl::StatusOr<BoundSet> ComputeBoundSet(GraphKind kind, int server_count);

}  // namespace spir

#endif  // SPIR_CAPACITY_H_
