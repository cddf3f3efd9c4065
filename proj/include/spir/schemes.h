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

#ifndef SPIR_SCHEMES_H_
#define SPIR_SCHEMES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "spir/prime_field.h"
#include "spir/realization.h"
#include "spir/scheme.h"

namespace spir {

// Base PIR scheme on the path P_N (N >= 3) with L' = 2 and one download per
// server. Server 1 sends a symbol of W_1, server n in [2, N-1] sends
// w_{n-1}(.) + w_n(.), server N sends a symbol of W_{N-1}. The two desired
// symbols sit at the two servers storing W_theta; every undesired message
// contributes the same symbol at both of its servers, so the chain cancels
// from either end. Internal choices: one per undesired message (ascending
// message id), selecting symbol 1 or 2.
absl::StatusOr<SchemeFamily> PathPirFamily(
    int server_count, const PrimeField& field = PrimeField::Binary());

// Base PIR scheme on the 3-cycle with L' = 6 and D' = 12. For theta on
// servers (i, j) with third server h and the other messages U_i (at i, h)
// and U_j (at j, h):
//   i: d1, U_i(1), d2+U_i(2), d3+U_i(3)
//   j: d4, U_j(1), d5+U_j(2), d6+U_j(3)
//   h: U_j(2), U_i(2), U_j(1)+U_i(3), U_j(3)+U_i(1)
// Terms are ordered by message id, singletons precede sums. No internal
// choices.
absl::StatusOr<SchemeFamily> Cycle3PirFamily(
    const PrimeField& field = PrimeField::Binary());

// Rate-1/2 SPIR scheme on P_3 with L = 2 and |R| = 2:
//   theta=1: a1+s1 | s1, a2+b2+s2 | b2+s2
//   theta=2: a1+s1 | s2, a1+b1+s1 | b2+s2
absl::StatusOr<SchemeFamily> P3CapacityFamily(
    const PrimeField& field = PrimeField::Binary());

absl::StatusOr<SchemeInstance> BuildPathPir(int server_count, MessageId theta,
                                            const UserRealization& realization);
absl::StatusOr<SchemeInstance> BuildCycle3Pir(
    MessageId theta, const UserRealization& realization);
absl::StatusOr<SchemeInstance> BuildP3CapacitySpir(
    MessageId theta, const UserRealization& realization);

// Successive cancellation: repeatedly resolves a form with exactly one
// unresolved symbol (unit coefficient). Returns integer coefficients over
// FlatForms() for each w_theta(l), or nullopt if some desired symbol is never
// resolved.
std::optional<std::vector<std::vector<std::int64_t>>> PeelingDecodePlan(
    const SchemeInstance& instance);

}  // namespace spir

#endif  // SPIR_SCHEMES_H_
