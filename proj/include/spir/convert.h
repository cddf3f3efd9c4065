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

#ifndef SPIR_CONVERT_H_
#define SPIR_CONVERT_H_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "spir/rational.h"
#include "spir/scheme.h"

namespace spir {

// Sizes of the SPIR scheme built from a PIR scheme with L' symbols per
// message on N servers and K messages: x repetitions of the PIR scheme and
// y raw randomness symbols downloaded from every server, where x and y are
// the least positive integers with x * L'/2 = (N-1) * y.
struct ConversionParams {
  int lcm = 0;  // lcm(L'/2, N-1)
  int repetitions = 0;  // x
  int pool_size = 0;    // y
  int symbols_per_message = 0;  // L = x L'
  int randomness_count = 0;     // N y + (K-1) L / 2
};

absl::StatusOr<ConversionParams> ComputeConversionParams(int base_symbols,
                                                         int server_count,
                                                         int message_count);

// Randomness indices assigned by the converter for one canonical instance.
struct MaskAssignment {
  // Undesired message symbol -> its unique mask, shared by both servers
  // storing that message.
  std::map<SymbolRef, int> undesired;
  // (server, desired symbol) -> mask.
  std::map<std::pair<ServerId, SymbolRef>, int> desired;
  // pools[n-1]: the y masks downloaded raw from server n, in slot order.
  std::vector<std::vector<int>> pools;
};

struct ConvertedInstance {
  SchemeInstance instance;
  MaskAssignment masks;
};

// Builds the canonical SPIR instance for `theta` from x canonical PIR
// instances. `choices` concatenates the PIR choices of each repetition.
//
// Masking: every queried undesired symbol gets a fresh mask. With W_theta on
// servers (i, j), the first y desired symbols at i are masked from pool(j)
// and the first y at j from pool(i). The u-th remaining desired symbol at i
// and the u-th at j share one mask from the pools of the other servers
// (ascending server id, slot order). Masks are numbered by first appearance
// scanning repetitions, then servers, forms and terms; every server first
// downloads its own pool raw.
absl::StatusOr<ConvertedInstance> ConvertInstance(
    const SchemeFamily& pir, const ConversionParams& params, MessageId theta,
    std::span<const int> choices);

// PIR -> SPIR with randomness shared by all servers. Requires r_count == 0
// and the symmetric retrieval property (checked with CheckSrp(pir,
// srp_limit)).
absl::StatusOr<SchemeFamily> ConvertPirToSpir(
    const SchemeFamily& pir, std::uint64_t srp_limit = 1'000'000);

struct SchemeStats {
  int symbols_per_message = 0;
  std::size_t downloads = 0;
  Rational rate;
  Rational rho;
};

// rate = L / D and rho = |R| / L. D is counted on each theta's canonical
// instance; differing counts are reported as an error.
absl::StatusOr<SchemeStats> ComputeSchemeStats(const SchemeFamily& family);

}  // namespace spir

#endif  // SPIR_CONVERT_H_
