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

#include "spir/scheme.h"

#include <cassert>
#include <utility>

#include "absl/strings/str_cat.h"

namespace spir {

std::size_t SchemeInstance::DownloadCount() const {
  std::size_t d = 0;
  for (const auto& server : answers) d += server.size();
  return d;
}

std::vector<FormRef> SchemeInstance::FlatForms() const {
  std::vector<FormRef> out;
  out.reserve(DownloadCount());
  for (std::size_t n = 0; n < answers.size(); ++n) {
    for (std::size_t p = 0; p < answers[n].size(); ++p) {
      out.push_back({static_cast<ServerId>(n + 1), p});
    }
  }
  return out;
}

std::vector<std::size_t> SchemeInstance::ServerFormIndices(ServerId n) const {
  std::size_t offset = 0;
  for (ServerId m = 1; m < n; ++m) offset += answers[m - 1].size();
  std::vector<std::size_t> out(answers[n - 1].size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = offset + p;
  return out;
}

absl::Status CheckLocality(const SchemeInstance& instance) {
  if (static_cast<int>(instance.answers.size()) !=
      instance.graph.server_count()) {
    return absl::FailedPreconditionError(
        absl::StrCat("instance has answers for ", instance.answers.size(),
                     " servers, graph has ", instance.graph.server_count()));
  }
  for (ServerId n = 1; n <= instance.graph.server_count(); ++n) {
    for (const AnswerForm& af : instance.answers[n - 1]) {
      for (const Term& t : af.form.terms()) {
        const SymbolRef& s = t.symbol;
        if (s.is_message()) {
          if (!instance.graph.Stores(n, s.message)) {
            return absl::FailedPreconditionError(absl::StrCat(
                "server ", n, " answers with ", SymbolName(s),
                " but does not store message ", s.message));
          }
          if (s.index < 1 || s.index > instance.symbols_per_message) {
            return absl::FailedPreconditionError(
                absl::StrCat(SymbolName(s), " exceeds L = ",
                             instance.symbols_per_message));
          }
        } else if (s.index < 1 || s.index > instance.randomness_count) {
          return absl::FailedPreconditionError(
              absl::StrCat(SymbolName(s), " exceeds |R| = ",
                           instance.randomness_count));
        }
      }
    }
  }
  return absl::OkStatus();
}

SchemeInstance Relabel(const SchemeInstance& canonical,
                       const UserRealization& realization) {
  SchemeInstance out = canonical;
  auto map = [&realization](const SymbolRef& s) {
    if (s.is_message()) {
      return SymbolRef::Message(
          s.message, realization.message_perms[s.message - 1][s.index - 1]);
    }
    return SymbolRef::Randomness(realization.randomness_perm[s.index - 1]);
  };
  for (auto& server : out.answers) {
    for (AnswerForm& af : server) af.form = af.form.Mapped(map);
  }
  if (!canonical.decode_plan.empty()) {
    const std::vector<int>& sigma =
        realization.message_perms[canonical.theta - 1];
    for (std::size_t l = 0; l < canonical.decode_plan.size(); ++l) {
      out.decode_plan[sigma[l] - 1] = canonical.decode_plan[l];
    }
  }
  return out;
}

SourceLayout SourceLayout::Of(const SchemeInstance& instance) {
  return SourceLayout(instance.graph.message_count(),
                      instance.symbols_per_message, instance.randomness_count);
}

std::size_t SourceLayout::Column(const SymbolRef& s) const {
  if (s.is_message()) {
    return static_cast<std::size_t>(s.message - 1) * l_ + (s.index - 1);
  }
  return static_cast<std::size_t>(k_) * l_ + (s.index - 1);
}

SymbolRef SourceLayout::SymbolAt(std::size_t column) const {
  const std::size_t message_cols = static_cast<std::size_t>(k_) * l_;
  if (column < message_cols) {
    return SymbolRef::Message(static_cast<MessageId>(column / l_) + 1,
                              static_cast<int>(column % l_) + 1);
  }
  return SymbolRef::Randomness(static_cast<int>(column - message_cols) + 1);
}

std::vector<std::size_t> SourceLayout::MessageColumns(MessageId k) const {
  std::vector<std::size_t> out(l_);
  for (int l = 0; l < l_; ++l) {
    out[l] = static_cast<std::size_t>(k - 1) * l_ + l;
  }
  return out;
}

std::vector<std::size_t> SourceLayout::RandomnessColumns() const {
  std::vector<std::size_t> out(r_);
  for (int r = 0; r < r_; ++r) {
    out[r] = static_cast<std::size_t>(k_) * l_ + r;
  }
  return out;
}

FieldMatrix CoefficientMatrix(const SchemeInstance& instance) {
  const SourceLayout layout = SourceLayout::Of(instance);
  FieldMatrix m(instance.field, instance.DownloadCount(), layout.total());
  std::size_t row = 0;
  for (const auto& server : instance.answers) {
    for (const AnswerForm& af : server) {
      for (const Term& t : af.form.terms()) {
        m.Set(row, layout.Column(t.symbol), t.coeff);
      }
      ++row;
    }
  }
  return m;
}

SchemeFamily::SchemeFamily(std::string name, Graph graph, PrimeField field,
                           Shape shape, CanonicalBuilder builder)
    : name_(std::move(name)),
      graph_(std::move(graph)),
      field_(field),
      shape_(std::move(shape)),
      builder_(std::move(builder)),
      space_(std::make_shared<RealizationSpace>(
          RealizationShape{graph_.message_count(), shape_.symbols_per_message,
                           shape_.randomness_count, shape_.choice_radices})),
      cache_(std::make_shared<Cache>()) {}

absl::Status SchemeFamily::CheckTheta(MessageId theta) const {
  if (theta < 1 || theta > message_count()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "theta = ", theta, " outside [1, ", message_count(), "]"));
  }
  return absl::OkStatus();
}

absl::StatusOr<SchemeInstance> SchemeFamily::Canonical(
    MessageId theta, std::span<const int> choices) const {
  if (absl::Status s = CheckTheta(theta); !s.ok()) return s;
  if (choices.size() != shape_.choice_radices.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(name_, " expects ", shape_.choice_radices.size(),
                     " internal choices, got ", choices.size()));
  }
  auto key = std::make_pair(theta,
                            std::vector<int>(choices.begin(), choices.end()));
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return *it->second;
  }
  absl::StatusOr<SchemeInstance> built = builder_(theta, choices);
  if (!built.ok()) return built.status();
  built->realization_id = 0;
  constexpr std::size_t kMaxCached = 4096;
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->entries.size() < kMaxCached) {
    cache_->entries.emplace(std::move(key),
                            std::make_shared<const SchemeInstance>(*built));
  }
  return built;
}

absl::StatusOr<SchemeInstance> SchemeFamily::Generate(
    MessageId theta, const UserRealization& r) const {
  if (absl::Status s = space_->Validate(r); !s.ok()) return s;
  absl::StatusOr<SchemeInstance> canonical = Canonical(theta, r.choices);
  if (!canonical.ok()) return canonical.status();
  SchemeInstance out = Relabel(*canonical, r);
  out.realization_id = space_->Rank(r);
  return out;
}

absl::StatusOr<SchemeInstance> SchemeFamily::Generate(
    MessageId theta, const RealizationId& id) const {
  absl::StatusOr<UserRealization> r = space_->Unrank(id);
  if (!r.ok()) return r.status();
  absl::StatusOr<SchemeInstance> canonical = Canonical(theta, r->choices);
  if (!canonical.ok()) return canonical.status();
  SchemeInstance out = Relabel(*canonical, *r);
  out.realization_id = id;
  return out;
}

}  // namespace spir
