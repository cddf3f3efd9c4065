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

#ifndef SPIR_SCHEME_H_
#define SPIR_SCHEME_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "spir/field_matrix.h"
#include "spir/graph.h"
#include "spir/linear_form.h"
#include "spir/prime_field.h"
#include "spir/realization.h"

namespace spir {

// A downloaded symbol. `round` groups forms for display: 0 is the leading
// raw-randomness row, u >= 1 is repetition u.
struct AnswerForm {
  LinearForm form;
  int round = 1;

  friend bool operator==(const AnswerForm&, const AnswerForm&) = default;
};

// Position of a form in an instance's answers.
struct FormRef {
  ServerId server;
  std::size_t position;
};

// One (theta, realization) pair of a scheme: every downloaded symbol as a
// linear form in the message and randomness symbols.
struct SchemeInstance {
  Graph graph;
  PrimeField field = PrimeField::Binary();
  MessageId theta = 1;
  RealizationId realization_id = 0;
  int symbols_per_message = 0;  // L
  int randomness_count = 0;     // |R|
  // answers[n-1] is server n's ordered answer list.
  std::vector<std::vector<AnswerForm>> answers;
  // decode_plan[l-1] holds integer coefficients over FlatForms() whose
  // combination equals w_theta(l). Empty when the scheme ships no plan.
  std::vector<std::vector<std::int64_t>> decode_plan;

  std::size_t DownloadCount() const;
  // Server-major order: all of server 1's forms, then server 2's, ...
  std::vector<FormRef> FlatForms() const;
  const LinearForm& Form(const FormRef& ref) const {
    return answers[ref.server - 1][ref.position].form;
  }
  // Flat indices of server n's forms.
  std::vector<std::size_t> ServerFormIndices(ServerId n) const;
};

// Every Message term at server n references a message stored at n, and all
// indices are within [1, L] / [1, |R|].
absl::Status CheckLocality(const SchemeInstance& instance);

// Applies the realization's permutations to a canonical instance:
// w_k(l) -> w_k(sigma_k(l)), s_r -> s_pi(r). The decode plan follows the
// relabeled desired symbols.
SchemeInstance Relabel(const SchemeInstance& canonical,
                       const UserRealization& realization);

// Column layout of the global source vector: W_1 | W_2 | ... | W_K | R.
class SourceLayout {
 public:
  SourceLayout(int message_count, int symbols_per_message,
               int randomness_count)
      : k_(message_count), l_(symbols_per_message), r_(randomness_count) {}
  static SourceLayout Of(const SchemeInstance& instance);

  int message_count() const { return k_; }
  int symbols_per_message() const { return l_; }
  int randomness_count() const { return r_; }
  std::size_t total() const {
    return static_cast<std::size_t>(k_) * l_ + r_;
  }

  std::size_t Column(const SymbolRef& s) const;
  SymbolRef SymbolAt(std::size_t column) const;
  std::vector<std::size_t> MessageColumns(MessageId k) const;
  std::vector<std::size_t> RandomnessColumns() const;

 private:
  int k_;
  int l_;
  int r_;
};

// Rows are FlatForms() in order, columns follow SourceLayout::Of(instance).
FieldMatrix CoefficientMatrix(const SchemeInstance& instance);

// A scheme parameterized by theta and the user's realization. The builder
// produces the canonical instance (identity permutations) for given internal
// choices; permutations are applied generically by Relabel.
class SchemeFamily {
 public:
  using CanonicalBuilder = std::function<absl::StatusOr<SchemeInstance>(
      MessageId theta, std::span<const int> choices)>;

  struct Shape {
    int symbols_per_message = 0;  // L
    int randomness_count = 0;     // |R|
    int base_symbols = 0;         // L' of the per-repetition scheme
    int base_downloads = 0;       // D' of the per-repetition scheme
    std::vector<int> choice_radices;
  };

  SchemeFamily(std::string name, Graph graph, PrimeField field, Shape shape,
               CanonicalBuilder builder);

  const std::string& name() const { return name_; }
  const Graph& graph() const { return graph_; }
  const PrimeField& field() const { return field_; }
  const Shape& shape() const { return shape_; }
  int symbols_per_message() const { return shape_.symbols_per_message; }
  int randomness_count() const { return shape_.randomness_count; }
  int message_count() const { return graph_.message_count(); }
  // Per-theta realization space.
  const RealizationSpace& space() const { return *space_; }

  absl::StatusOr<SchemeInstance> Canonical(MessageId theta,
                                           std::span<const int> choices) const;
  absl::StatusOr<SchemeInstance> Generate(MessageId theta,
                                          const UserRealization& r) const;
  absl::StatusOr<SchemeInstance> Generate(MessageId theta,
                                          const RealizationId& id) const;

 private:
  absl::Status CheckTheta(MessageId theta) const;

  std::string name_;
  Graph graph_;
  PrimeField field_;
  Shape shape_;
  CanonicalBuilder builder_;
  std::shared_ptr<const RealizationSpace> space_;

  // Canonical instances depend only on (theta, choices); memoized because
  // exhaustive audits revisit them once per permutation tuple.
  struct Cache {
    std::mutex mu;
    std::map<std::pair<MessageId, std::vector<int>>,
             std::shared_ptr<const SchemeInstance>>
        entries;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace spir

#endif  // SPIR_SCHEME_H_
