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

#ifndef SPIR_ENTROPY_H_
#define SPIR_ENTROPY_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "spir/graph.h"
#include "spir/rational.h"
#include "spir/scheme.h"

namespace spir {

// A block of the source vector: all L symbols of one message, or all of R.
struct SourceBlock {
  bool randomness = false;
  MessageId message = 0;

  static SourceBlock Message(MessageId k) { return {false, k}; }
  static SourceBlock Randomness() { return {true, 0}; }

  friend auto operator<=>(const SourceBlock&, const SourceBlock&) = default;
};

std::string SourceBlockName(const SourceBlock& b);

std::vector<std::size_t> BlockColumns(const SourceLayout& layout,
                                      const std::vector<SourceBlock>& blocks);

// H(forms | given_forms, given_blocks, Q = this realization), in q-ary units.
// Form indices refer to SchemeInstance::FlatForms().
struct EntropyQuery {
  std::vector<std::size_t> forms;
  std::vector<std::size_t> given_forms;
  std::vector<SourceBlock> given_blocks;
};

// Rank form: rank([F; G] without the given block columns) minus
// rank(G without the given block columns). Exact for linear answers over
// independent uniform sources.
int LinearEntropy(const SchemeInstance& instance, const EntropyQuery& query);
int LinearEntropy(const FieldMatrix& coefficients, const SourceLayout& layout,
                  const EntropyQuery& query);

struct OracleResult {
  Rational entropy;
  // True when both joint distributions involved are uniform over q^m points;
  // the entropy is then exact. Otherwise it is a rounded approximation.
  bool uniform = false;
};

// Brute force: evaluates every form on all q^(KL + |R|) source vectors and
// computes the conditional entropy from the exact joint distribution.
absl::StatusOr<OracleResult> EntropyOracle(const SchemeInstance& instance,
                                           const EntropyQuery& query,
                                           std::uint64_t budget = 1u << 24);

}  // namespace spir

#endif  // SPIR_ENTROPY_H_
