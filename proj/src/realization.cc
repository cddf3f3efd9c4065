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

#include "spir/realization.h"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "boost/random/mersenne_twister.hpp"
#include "boost/random/uniform_int_distribution.hpp"

namespace spir {

BigInt Factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool IsPermutation(std::span<const int> perm) {
  std::vector<bool> seen(perm.size() + 1, false);
  for (int v : perm) {
    if (v < 1 || v > static_cast<int>(perm.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

BigInt PermutationRank(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  BigInt rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j) {
      if (perm[j] < perm[i]) ++smaller_after;
    }
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

std::vector<int> PermutationUnrank(BigInt rank, int n) {
  std::vector<int> digits(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    const int radix = n - i;
    digits[i] = static_cast<int>(rank % radix);
    rank /= radix;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) {
    perm[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return perm;
}

RealizationSpace::RealizationSpace(RealizationShape shape)
    : shape_(std::move(shape)) {
  message_factorial_ = Factorial(shape_.symbols_per_message);
  randomness_factorial_ = Factorial(shape_.randomness_count);
  choice_count_ = 1;
  for (int radix : shape_.choice_radices) {
    assert(radix >= 1);
    choice_count_ *= radix;
  }
  size_ = choice_count_ * randomness_factorial_;
  for (int k = 0; k < shape_.message_count; ++k) size_ *= message_factorial_;
}

absl::StatusOr<UserRealization> RealizationSpace::Unrank(
    const RealizationId& id) const {
  if (id < 0 || id >= size_) {
    return absl::OutOfRangeError(absl::StrCat(
        "realization id ", id.str(), " outside [0, ", size_.str(), ")"));
  }
  BigInt rest = id;
  UserRealization r;
  r.choices.resize(shape_.choice_radices.size());
  for (std::size_t i = 0; i < shape_.choice_radices.size(); ++i) {
    const int radix = shape_.choice_radices[i];
    r.choices[i] = static_cast<int>(rest % radix);
    rest /= radix;
  }
  r.randomness_perm =
      PermutationUnrank(rest % randomness_factorial_, shape_.randomness_count);
  rest /= randomness_factorial_;
  r.message_perms.resize(shape_.message_count);
  for (int k = shape_.message_count - 1; k >= 0; --k) {
    r.message_perms[k] =
        PermutationUnrank(rest % message_factorial_, shape_.symbols_per_message);
    rest /= message_factorial_;
  }
  return r;
}

RealizationId RealizationSpace::Rank(const UserRealization& r) const {
  BigInt id = 0;
  for (int k = 0; k < shape_.message_count; ++k) {
    id = id * message_factorial_ + PermutationRank(r.message_perms[k]);
  }
  id = id * randomness_factorial_ + PermutationRank(r.randomness_perm);
  for (std::size_t i = shape_.choice_radices.size(); i-- > 0;) {
    id = id * shape_.choice_radices[i] + r.choices[i];
  }
  return id;
}

absl::Status RealizationSpace::Validate(const UserRealization& r) const {
  if (static_cast<int>(r.message_perms.size()) != shape_.message_count) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", shape_.message_count,
                     " message permutations, got ", r.message_perms.size()));
  }
  for (std::size_t k = 0; k < r.message_perms.size(); ++k) {
    if (static_cast<int>(r.message_perms[k].size()) !=
            shape_.symbols_per_message ||
        !IsPermutation(r.message_perms[k])) {
      return absl::InvalidArgumentError(absl::StrCat(
          "message ", k + 1, " permutation is not a bijection of [1, ",
          shape_.symbols_per_message, "]"));
    }
  }
  if (static_cast<int>(r.randomness_perm.size()) != shape_.randomness_count ||
      !IsPermutation(r.randomness_perm)) {
    return absl::InvalidArgumentError(
        absl::StrCat("randomness permutation is not a bijection of [1, ",
                     shape_.randomness_count, "]"));
  }
  if (r.choices.size() != shape_.choice_radices.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", shape_.choice_radices.size(),
                     " internal choices, got ", r.choices.size()));
  }
  for (std::size_t i = 0; i < r.choices.size(); ++i) {
    if (r.choices[i] < 0 || r.choices[i] >= shape_.choice_radices[i]) {
      return absl::InvalidArgumentError(
          absl::StrCat("internal choice ", i, " = ", r.choices[i],
                       " outside [0, ", shape_.choice_radices[i], ")"));
    }
  }
  return absl::OkStatus();
}

UserRealization RealizationSpace::Identity(std::span<const int> choices) const {
  UserRealization r;
  std::vector<int> id_l(shape_.symbols_per_message);
  std::iota(id_l.begin(), id_l.end(), 1);
  r.message_perms.assign(shape_.message_count, id_l);
  r.randomness_perm.resize(shape_.randomness_count);
  std::iota(r.randomness_perm.begin(), r.randomness_perm.end(), 1);
  r.choices.assign(choices.begin(), choices.end());
  return r;
}

std::vector<int> RealizationSpace::ChoiceDigits(std::uint64_t index) const {
  std::vector<int> digits(shape_.choice_radices.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const auto radix = static_cast<std::uint64_t>(shape_.choice_radices[i]);
    digits[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return digits;
}

std::string_view CoverageName(Coverage c) {
  switch (c) {
    case Coverage::kEnumerated:
      return "enumerated";
    case Coverage::kOrbitReduced:
      return "orbit-reduced";
    case Coverage::kSampled:
      return "sampled";
  }
  return "unknown";
}

RealizationSequence RealizationSequence::Range(BigInt count,
                                               Coverage coverage) {
  assert(count <= BigInt(std::numeric_limits<std::uint64_t>::max()));
  return RealizationSequence(coverage, static_cast<std::uint64_t>(count), {});
}

RealizationSequence RealizationSequence::Sample(
    std::vector<RealizationId> ids) {
  const std::uint64_t n = ids.size();
  return RealizationSequence(Coverage::kSampled, n, std::move(ids));
}

RealizationId RealizationSequence::At(std::uint64_t i) const {
  assert(i < size_);
  if (coverage_ == Coverage::kSampled) return ids_[i];
  return RealizationId(i);
}

RealizationSequence SampleRealizations(const RealizationSpace& space,
                                       std::uint64_t count,
                                       std::uint64_t seed) {
  boost::random::mt19937_64 gen(seed);
  boost::random::uniform_int_distribution<BigInt> dist(0, space.size() - 1);
  std::vector<RealizationId> ids;
  ids.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) ids.push_back(dist(gen));
  return RealizationSequence::Sample(std::move(ids));
}

RealizationSequence EnumerateRealizations(const RealizationSpace& space,
                                          std::uint64_t limit,
                                          std::uint64_t seed) {
  if (space.size() <= limit) {
    return RealizationSequence::Range(space.size(), Coverage::kEnumerated);
  }
  return SampleRealizations(space, limit, seed);
}

RealizationSequence OrbitRepresentatives(const RealizationSpace& space) {
  return RealizationSequence::Range(space.choice_count(),
                                    Coverage::kOrbitReduced);
}

}  // namespace spir
