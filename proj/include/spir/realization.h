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

#ifndef SPIR_REALIZATION_H_
#define SPIR_REALIZATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "spir/rational.h"

namespace spir {

using RealizationId = BigInt;

// One outcome of the user's private randomness: an independent permutation
// of each message's symbol indices, one of the randomness indices, and a
// vector of scheme-specific internal choices.
struct UserRealization {
  // message_perms[k-1][l-1] is the index that canonical symbol l of W_k maps
  // to. Values are 1-based.
  std::vector<std::vector<int>> message_perms;
  std::vector<int> randomness_perm;
  // Digit i lies in [0, choice_radices[i]).
  std::vector<int> choices;

  friend bool operator==(const UserRealization&,
                         const UserRealization&) = default;
};

struct RealizationShape {
  int message_count = 0;
  int symbols_per_message = 0;
  int randomness_count = 0;
  std::vector<int> choice_radices;
};

// Bijection between [0, size()) and realization tuples. The id is mixed
// radix with the internal choices as the least significant digits, then the
// randomness permutation, then the message permutations (W_K lowest). Ids
// below choice_count() are therefore exactly the identity-permutation
// realizations.
class RealizationSpace {
 public:
  explicit RealizationSpace(RealizationShape shape);

  const RealizationShape& shape() const { return shape_; }
  const BigInt& size() const { return size_; }
  const BigInt& choice_count() const { return choice_count_; }

  absl::StatusOr<UserRealization> Unrank(const RealizationId& id) const;
  RealizationId Rank(const UserRealization& r) const;
  absl::Status Validate(const UserRealization& r) const;

  UserRealization Identity(std::span<const int> choices) const;
  // Digits of a choice index in [0, choice_count()).
  std::vector<int> ChoiceDigits(std::uint64_t index) const;

 private:
  RealizationShape shape_;
  BigInt message_factorial_;
  BigInt randomness_factorial_;
  BigInt choice_count_;
  BigInt size_;
};

BigInt Factorial(int n);
// Lehmer-code rank of a 1-based permutation; the identity has rank 0.
BigInt PermutationRank(std::span<const int> perm);
std::vector<int> PermutationUnrank(BigInt rank, int n);
bool IsPermutation(std::span<const int> perm);

enum class Coverage {
  kEnumerated,    // every realization id visited
  kOrbitReduced,  // identity permutations x all internal choices
  kSampled,       // seeded uniform sample
};

std::string_view CoverageName(Coverage c);

// Indexable list of realization ids.
class RealizationSequence {
 public:
  static RealizationSequence Range(BigInt count, Coverage coverage);
  static RealizationSequence Sample(std::vector<RealizationId> ids);

  Coverage coverage() const { return coverage_; }
  bool sampled() const { return coverage_ == Coverage::kSampled; }
  std::uint64_t size() const { return size_; }
  RealizationId At(std::uint64_t i) const;

 private:
  RealizationSequence(Coverage coverage, std::uint64_t size,
                      std::vector<RealizationId> ids)
      : coverage_(coverage), size_(size), ids_(std::move(ids)) {}

  Coverage coverage_;
  std::uint64_t size_;
  std::vector<RealizationId> ids_;  // only for sampled sequences
};

// Every id when size() <= limit, otherwise `limit` ids drawn uniformly (with
// replacement) from a generator seeded by `seed`.
RealizationSequence EnumerateRealizations(const RealizationSpace& space,
                                          std::uint64_t limit,
                                          std::uint64_t seed);
RealizationSequence SampleRealizations(const RealizationSpace& space,
                                       std::uint64_t count,
                                       std::uint64_t seed);
// Ids [0, choice_count()): the identity permutations with every internal
// choice. Sufficient for any quantity invariant under relabeling symbols.
RealizationSequence OrbitRepresentatives(const RealizationSpace& space);

}  // namespace spir

#endif  // SPIR_REALIZATION_H_
