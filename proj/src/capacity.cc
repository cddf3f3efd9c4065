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

#include "spir/capacity.h"

#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "spir/convert.h"

namespace spir {
namespace {

absl::Status CheckArgs(GraphKind kind, int n) {
  if (kind != GraphKind::kPath && kind != GraphKind::kCycle) {
    return absl::InvalidArgumentError(
        "bounds are defined for path and cycle graphs only");
  }
  if (n < 3) {
    return absl::InvalidArgumentError(
        absl::StrCat("need N >= 3 servers, got ", n));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Rational> AchievableRate(GraphKind kind, int server_count) {
  if (absl::Status s = CheckArgs(kind, server_count); !s.ok()) return s;
  const Rational n(server_count);
  Rational denom = n + n / Rational(server_count - 1);
  if (kind == GraphKind::kCycle) denom += Rational(1);
  return Rational(2) / denom;
}

absl::StatusOr<RateRho> GeneralRateRho(int base_symbols, int base_downloads,
                                       int server_count, int message_count) {
  absl::StatusOr<ConversionParams> p =
      ComputeConversionParams(base_symbols, server_count, message_count);
  if (!p.ok()) return p.status();
  const Rational lx(static_cast<std::int64_t>(base_symbols) * p->repetitions);
  const Rational ny(static_cast<std::int64_t>(server_count) * p->pool_size);
  const Rational dx(static_cast<std::int64_t>(base_downloads) * p->repetitions);
  RateRho out;
  out.rate = lx / (dx + ny);
  out.rho = Rational(message_count - 1, 2) + ny / lx;
  return out;
}

absl::StatusOr<Rational> PirCapacity(GraphKind kind, int server_count) {
  if (absl::Status s = CheckArgs(kind, server_count); !s.ok()) return s;
  return Rational(2, kind == GraphKind::kPath ? server_count
                                              : server_count + 1);
}

absl::StatusOr<Rational> UpperBound(GraphKind kind, int server_count) {
  if (absl::Status s = CheckArgs(kind, server_count); !s.ok()) return s;
  const Rational n(server_count);
  const Rational n1(server_count - 1);
  const Rational denom = kind == GraphKind::kPath
                             ? n + Rational(2) / n1
                             : n + Rational(1) + Rational(1) / n1;
  return Rational(2) / denom;
}

absl::StatusOr<Rational> GraphReplicatedCapacity(GraphKind kind,
                                                 int server_count) {
  if (absl::Status s = CheckArgs(kind, server_count); !s.ok()) return s;
  return Rational(1, server_count);
}

nlohmann::json BoundSet::ToJson() const {
  nlohmann::json j;
  j["kind"] = std::string(GraphKindName(kind));
  j["N"] = server_count;
  j["graph_replicated"] = graph_replicated.ToString();
  j["lower"] = lower.ToString();
  j["conversion_rate"] = conversion_rate.ToString();
  j["upper"] = upper.ToString();
  j["pir"] = pir_capacity.ToString();
  if (rho_lower_bound) j["rho_lower_bound"] = rho_lower_bound->ToString();
  return j;
}

absl::StatusOr<BoundSet> ComputeBoundSet(GraphKind kind, int server_count) {
  if (absl::Status s = CheckArgs(kind, server_count); !s.ok()) return s;
  BoundSet b;
  b.kind = kind;
  b.server_count = server_count;
  b.graph_replicated = *GraphReplicatedCapacity(kind, server_count);
  b.conversion_rate = *AchievableRate(kind, server_count);
  b.upper = *UpperBound(kind, server_count);
  b.pir_capacity = *PirCapacity(kind, server_count);
  b.lower = b.conversion_rate;
  if (kind == GraphKind::kPath && server_count == 3) {
    b.lower = Rational(1, 2);
    b.rho_lower_bound = Rational(1);
  }
  return b;
}

}  // namespace spir
