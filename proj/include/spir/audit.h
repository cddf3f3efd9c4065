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

#ifndef SPIR_AUDIT_H_
#define SPIR_AUDIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "spir/entropy.h"
#include "spir/rational.h"
#include "spir/realization.h"
#include "spir/scheme.h"

namespace spir {

enum class CheckStatus { kPass, kFail, kSampledPass };

std::string_view CheckStatusName(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  // Inequality checks read lhs >= rhs and record slack = lhs - rhs.
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::optional<Rational> slack;
  std::string coverage;  // how the realization space was covered
  std::string witness;

  nlohmann::json ToJson() const;
};

struct AuditReport {
  std::string scheme;
  std::vector<CheckResult> checks;

  // No check failed. Sampled passes count as passes.
  bool ok() const;
  const CheckResult* Find(std::string_view name) const;
  nlohmann::json ToJson() const;
};

struct AuditOptions {
  // Realization spaces up to this size are enumerated for the feasibility
  // checks; beyond it the orbit representatives are used when there are at
  // most `limit` of them, and a sample otherwise.
  std::uint64_t limit = 1'000'000;
  // Enumeration threshold for the converse averages, which evaluate many
  // queries per realization.
  std::uint64_t converse_limit = 20'000;
  bool sample = false;  // force sampling
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
};

// Coverage rule shared by all family-level checks.
RealizationSequence SelectRealizations(const RealizationSpace& space,
                                       const AuditOptions& options,
                                       std::uint64_t enumerate_limit);

struct ReliabilityResult {
  bool pass = false;
  // certificate[l-1] * M = unit vector of w_theta(l), from Gaussian
  // elimination.
  std::vector<std::vector<std::uint32_t>> certificate;
  std::string witness;
};

// Each desired symbol must be a combination of the downloaded forms, and the
// instance's decode plan (when present) must evaluate to it.
ReliabilityResult VerifyReliability(const SchemeInstance& instance);

struct DatabasePrivacyResult {
  bool pass = false;
  int rank_all = 0;
  int rank_without_undesired = 0;  // undesired message columns removed
  std::string witness;
};

// I(W_undesired; A) = rank(M) - rank(M without undesired columns) must be 0.
DatabasePrivacyResult VerifyDatabasePrivacy(const SchemeInstance& instance);

// What server n observes: its forms in order with their round tags.
std::string ServerView(const SchemeInstance& instance, ServerId n);
// ServerView with each message's symbol indices and the randomness indices
// renumbered by first appearance. Two views are related by a relabeling iff
// their canonical views agree.
std::string CanonicalServerView(const SchemeInstance& instance, ServerId n);

struct UserPrivacyResult {
  CheckStatus status = CheckStatus::kPass;
  Coverage coverage = Coverage::kEnumerated;
  std::uint64_t realizations = 0;  // per theta
  std::string witness;
};

// Compares, per server, the distribution of views under theta and theta'.
// Enumerated: multisets of exact views. Orbit-reduced: a uniformly relabeled
// view is uniform on its orbit, so the distributions agree iff every
// canonical view is produced by equally many choice vectors. Sampled: the
// sets of canonical views seen must agree.
absl::StatusOr<UserPrivacyResult> VerifyUserPrivacy(
    const SchemeFamily& family, MessageId theta, MessageId theta_prime,
    const AuditOptions& options = {});

// Server-level entropy query: H(A_servers | A_given_servers, given_blocks).
struct AnswerQuery {
  std::vector<ServerId> servers;
  std::vector<ServerId> given_servers;
  std::vector<SourceBlock> given_blocks;

  friend auto operator<=>(const AnswerQuery&, const AnswerQuery&) = default;
};

EntropyQuery ToEntropyQuery(const SchemeInstance& instance,
                            const AnswerQuery& query);

// Averages of linear entropies over a realization sequence, i.e. H(. | Q)
// when the sequence covers the space (or its orbit representatives).
absl::StatusOr<std::vector<Rational>> AverageEntropies(
    const SchemeFamily& family, MessageId theta,
    const std::vector<AnswerQuery>& queries, const RealizationSequence& seq);

// Reliability, database privacy and user privacy for every theta.
absl::StatusOr<std::vector<CheckResult>> AuditFeasibility(
    const SchemeFamily& family, const AuditOptions& options = {});

// Necessary conditions every feasible scheme satisfies: the randomness lower
// bound, answer-entropy invariance under theta, the pairwise bound for the
// two servers storing W_k and, on paths and cycles, the conditional answer
// bounds and the download bounds they imply (plus the dedicated three-server
// path chain).
absl::StatusOr<std::vector<CheckResult>> AuditConverse(
    const SchemeFamily& family, const AuditOptions& options = {});

absl::StatusOr<AuditReport> RunAudit(const SchemeFamily& family,
                                     const AuditOptions& options = {});

}  // namespace spir

#endif  // SPIR_AUDIT_H_
