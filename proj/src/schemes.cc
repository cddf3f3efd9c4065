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

#include "spir/schemes.h"

#include <algorithm>
#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spir {
namespace {

SchemeInstance EmptyInstance(const Graph& graph, const PrimeField& field,
                             MessageId theta, int symbols, int randomness) {
  SchemeInstance inst;
  inst.graph = graph;
  inst.field = field;
  inst.theta = theta;
  inst.symbols_per_message = symbols;
  inst.randomness_count = randomness;
  inst.answers.resize(graph.server_count());
  return inst;
}

absl::Status AttachPeelingPlan(SchemeInstance& inst) {
  auto plan = PeelingDecodePlan(inst);
  if (!plan.has_value()) {
    return absl::InternalError(absl::StrCat(
        "successive cancellation fails to decode W_", inst.theta));
  }
  inst.decode_plan = *std::move(plan);
  return absl::OkStatus();
}

// The message at server n other than k.
MessageId OtherMessageAt(const Graph& g, ServerId n, MessageId k) {
  for (MessageId m : g.StorageOf(n)) {
    if (m != k) return m;
  }
  return 0;
}

}  // namespace

std::optional<std::vector<std::vector<std::int64_t>>> PeelingDecodePlan(
    const SchemeInstance& instance) {
  const std::vector<FormRef> flat = instance.FlatForms();
  const std::size_t d = flat.size();
  std::map<SymbolRef, std::vector<std::int64_t>> known;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < d; ++i) {
      const LinearForm& f = instance.Form(flat[i]);
      const Term* unknown = nullptr;
      int unknown_count = 0;
      for (const Term& t : f.terms()) {
        if (!known.contains(t.symbol)) {
          unknown = &t;
          ++unknown_count;
        }
      }
      if (unknown_count != 1) continue;
      if (unknown->coeff != 1 && unknown->coeff != -1) continue;
      // unknown = coeff * (f - sum of known terms), since coeff = 1/coeff.
      std::vector<std::int64_t> expr(d, 0);
      expr[i] = 1;
      for (const Term& t : f.terms()) {
        if (&t == unknown) continue;
        const std::vector<std::int64_t>& e = known.at(t.symbol);
        for (std::size_t j = 0; j < d; ++j) expr[j] -= t.coeff * e[j];
      }
      for (std::int64_t& v : expr) v *= unknown->coeff;
      known.emplace(unknown->symbol, std::move(expr));
      progress = true;
    }
  }
  std::vector<std::vector<std::int64_t>> plan;
  for (int l = 1; l <= instance.symbols_per_message; ++l) {
    auto it = known.find(SymbolRef::Message(instance.theta, l));
    if (it == known.end()) return std::nullopt;
    plan.push_back(it->second);
  }
  return plan;
}

absl::StatusOr<SchemeFamily> PathPirFamily(int server_count,
                                           const PrimeField& field) {
  if (server_count < 3) {
    return absl::InvalidArgumentError(
        absl::StrCat("path PIR needs N >= 3, got ", server_count));
  }
  absl::StatusOr<Graph> graph = Graph::Build(GraphKind::kPath, server_count);
  if (!graph.ok()) return graph.status();
  const int k_count = graph->message_count();
  SchemeFamily::Shape shape;
  shape.symbols_per_message = 2;
  shape.randomness_count = 0;
  shape.base_symbols = 2;
  shape.base_downloads = server_count;
  shape.choice_radices.assign(k_count - 1, 2);

  auto builder = [g = *graph, field](
                     MessageId theta,
                     std::span<const int> choices) -> absl::StatusOr<SchemeInstance> {
    SchemeInstance inst = EmptyInstance(g, field, theta, 2, 0);
    // Symbol queried from each message.
    auto symbol_at = [&](MessageId m, ServerId n) {
      if (m == theta) {
        // Desired symbol 1 at the lower server, 2 at the upper one.
        return SymbolRef::Message(m, n == m ? 1 : 2);
      }
      const int digit = choices[m < theta ? m - 1 : m - 2];
      return SymbolRef::Message(m, digit + 1);
    };
    for (ServerId n = 1; n <= g.server_count(); ++n) {
      LinearForm f;
      for (MessageId m : g.StorageOf(n)) f.Add(symbol_at(m, n));
      inst.answers[n - 1].push_back({std::move(f), 1});
    }
    if (absl::Status s = AttachPeelingPlan(inst); !s.ok()) return s;
    return inst;
  };
  return SchemeFamily(absl::StrCat("path-pir-", server_count), *graph, field,
                      std::move(shape), std::move(builder));
}

absl::StatusOr<SchemeFamily> Cycle3PirFamily(const PrimeField& field) {
  absl::StatusOr<Graph> graph = Graph::Build(GraphKind::kCycle, 3);
  if (!graph.ok()) return graph.status();
  SchemeFamily::Shape shape;
  shape.symbols_per_message = 6;
  shape.randomness_count = 0;
  shape.base_symbols = 6;
  shape.base_downloads = 12;

  auto builder = [g = *graph, field](
                     MessageId theta,
                     std::span<const int>) -> absl::StatusOr<SchemeInstance> {
    SchemeInstance inst = EmptyInstance(g, field, theta, 6, 0);
    const auto [i, j] = g.ServersOf(theta);
    const ServerId h = 6 - i - j;
    const MessageId ui = OtherMessageAt(g, i, theta);
    const MessageId uj = OtherMessageAt(g, j, theta);
    auto d = [theta](int l) { return SymbolRef::Message(theta, l); };
    auto u = [](MessageId m, int l) { return SymbolRef::Message(m, l); };

    std::vector<std::vector<LinearForm>> raw(3);
    raw[i - 1] = {{d(1)}, {u(ui, 1)}, {d(2), u(ui, 2)}, {d(3), u(ui, 3)}};
    raw[j - 1] = {{d(4)}, {u(uj, 1)}, {d(5), u(uj, 2)}, {d(6), u(uj, 3)}};
    raw[h - 1] = {{u(uj, 2)}, {u(ui, 2)}, {u(uj, 1), u(ui, 3)},
                  {u(uj, 3), u(ui, 1)}};
    for (ServerId n = 1; n <= 3; ++n) {
      std::vector<LinearForm> forms;
      for (const LinearForm& f : raw[n - 1]) {
        LinearForm sorted;
        for (const Term& t : f.Sorted()) sorted.Add(t.symbol, t.coeff);
        forms.push_back(std::move(sorted));
      }
      std::stable_sort(forms.begin(), forms.end(),
                       [](const LinearForm& a, const LinearForm& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         if (a.size() == 1) {
                           return a.terms()[0].symbol.message <
                                  b.terms()[0].symbol.message;
                         }
                         return false;
                       });
      for (LinearForm& f : forms) inst.answers[n - 1].push_back({std::move(f), 1});
    }
    if (absl::Status s = AttachPeelingPlan(inst); !s.ok()) return s;
    return inst;
  };
  return SchemeFamily("cycle3-pir", *graph, field, std::move(shape),
                      std::move(builder));
}

absl::StatusOr<SchemeFamily> P3CapacityFamily(const PrimeField& field) {
  absl::StatusOr<Graph> graph = Graph::Build(GraphKind::kPath, 3);
  if (!graph.ok()) return graph.status();
  SchemeFamily::Shape shape;
  shape.symbols_per_message = 2;
  shape.randomness_count = 2;
  shape.base_symbols = 2;
  shape.base_downloads = 3;

  auto builder = [g = *graph, field](
                     MessageId theta,
                     std::span<const int>) -> absl::StatusOr<SchemeInstance> {
    SchemeInstance inst = EmptyInstance(g, field, theta, 2, 2);
    const SymbolRef a1 = SymbolRef::Message(1, 1);
    const SymbolRef a2 = SymbolRef::Message(1, 2);
    const SymbolRef b1 = SymbolRef::Message(2, 1);
    const SymbolRef b2 = SymbolRef::Message(2, 2);
    const SymbolRef s1 = SymbolRef::Randomness(1);
    const SymbolRef s2 = SymbolRef::Randomness(2);
    inst.answers[0] = {{{a1, s1}, 1}};
    inst.answers[2] = {{{b2, s2}, 1}};
    // Flat order: [server1 form, server2 raw, server2 sum, server3 form].
    if (theta == 1) {
      inst.answers[1] = {{{s1}, 1}, {{a2, b2, s2}, 1}};
      inst.decode_plan = {{1, -1, 0, 0}, {0, 0, 1, -1}};
    } else {
      inst.answers[1] = {{{s2}, 1}, {{a1, b1, s1}, 1}};
      inst.decode_plan = {{-1, 0, 1, 0}, {0, -1, 0, 1}};
    }
    return inst;
  };
  return SchemeFamily("p3-capacity", *graph, field, std::move(shape),
                      std::move(builder));
}

absl::StatusOr<SchemeInstance> BuildPathPir(
    int server_count, MessageId theta, const UserRealization& realization) {
  absl::StatusOr<SchemeFamily> family = PathPirFamily(server_count);
  if (!family.ok()) return family.status();
  return family->Generate(theta, realization);
}

absl::StatusOr<SchemeInstance> BuildCycle3Pir(
    MessageId theta, const UserRealization& realization) {
  absl::StatusOr<SchemeFamily> family = Cycle3PirFamily();
  if (!family.ok()) return family.status();
  return family->Generate(theta, realization);
}

absl::StatusOr<SchemeInstance> BuildP3CapacitySpir(
    MessageId theta, const UserRealization& realization) {
  absl::StatusOr<SchemeFamily> family = P3CapacityFamily();
  if (!family.ok()) return family.status();
  return family->Generate(theta, realization);
}

}  // namespace spir
