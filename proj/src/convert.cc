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

#include "spir/convert.h"

#include <memory>
#include <numeric>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "spir/srp.h"

namespace spir {

absl::StatusOr<ConversionParams> ComputeConversionParams(int base_symbols,
                                                         int server_count,
                                                         int message_count) {
  if (base_symbols <= 0 || base_symbols % 2 != 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "L' must be a positive even integer, got ", base_symbols));
  }
  if (server_count < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("need N >= 2 servers, got ", server_count));
  }
  if (message_count < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("need K >= 1 messages, got ", message_count));
  }
  ConversionParams p;
  const int half = base_symbols / 2;
  p.lcm = std::lcm(half, server_count - 1);
  p.repetitions = p.lcm / half;
  p.pool_size = p.lcm / (server_count - 1);
  p.symbols_per_message = p.repetitions * base_symbols;
  p.randomness_count = server_count * p.pool_size +
                       (message_count - 1) * p.symbols_per_message / 2;
  return p;
}

namespace {

// Logical mask before numbering: an undesired symbol, or a pool slot.
struct MaskKey {
  bool pool = false;
  ServerId server = 0;  // pool owner
  int slot = 0;
  SymbolRef symbol;  // undesired symbol

  friend auto operator<=>(const MaskKey&, const MaskKey&) = default;
};

absl::Status CheckBaseInstance(const SchemeInstance& base) {
  for (std::size_t n = 0; n < base.answers.size(); ++n) {
    for (const AnswerForm& af : base.answers[n]) {
      std::set<MessageId> messages;
      for (const Term& t : af.form.terms()) {
        if (!t.symbol.is_message() || t.coeff != 1) {
          return absl::FailedPreconditionError(absl::StrCat(
              "server ", n + 1, " form ", af.form.ToString(),
              " is not a sum of message symbols"));
        }
        if (!messages.insert(t.symbol.message).second) {
          return absl::FailedPreconditionError(absl::StrCat(
              "server ", n + 1, " form ", af.form.ToString(),
              " repeats a message"));
        }
      }
    }
  }
  if (base.decode_plan.empty()) {
    return absl::FailedPreconditionError("PIR instance carries no decode plan");
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<ConvertedInstance> ConvertInstance(
    const SchemeFamily& pir, const ConversionParams& params, MessageId theta,
    std::span<const int> choices) {
  const Graph& g = pir.graph();
  const int n_servers = g.server_count();
  const int base_l = pir.symbols_per_message();
  const int x = params.repetitions;
  const int y = params.pool_size;
  const std::size_t per_rep = pir.shape().choice_radices.size();
  if (choices.size() != per_rep * x) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", per_rep * x, " choices, got ",
                     choices.size()));
  }
  if (theta < 1 || theta > g.message_count()) {
    return absl::InvalidArgumentError(absl::StrCat("theta = ", theta,
                                                   " out of range"));
  }
  const auto [si, sj] = g.ServersOf(theta);
  std::vector<ServerId> others;
  for (ServerId n = 1; n <= n_servers; ++n) {
    if (n != si && n != sj) others.push_back(n);
  }

  // Repetitions with symbol indices shifted into block u.
  std::vector<SchemeInstance> reps;
  for (int u = 0; u < x; ++u) {
    absl::StatusOr<SchemeInstance> base =
        pir.Canonical(theta, choices.subspan(u * per_rep, per_rep));
    if (!base.ok()) return base.status();
    if (absl::Status s = CheckBaseInstance(*base); !s.ok()) return s;
    const int offset = u * base_l;
    for (auto& server : base->answers) {
      for (AnswerForm& af : server) {
        af.form = af.form.Mapped([offset](const SymbolRef& s) {
          return SymbolRef::Message(s.message, s.index + offset);
        });
      }
    }
    // Each undesired symbol must appear at both servers storing it, and each
    // desired symbol exactly once.
    std::map<SymbolRef, std::set<ServerId>> seen_at;
    std::map<SymbolRef, int> desired_occurrences;
    for (ServerId n = 1; n <= n_servers; ++n) {
      for (const AnswerForm& af : base->answers[n - 1]) {
        for (const Term& t : af.form.terms()) {
          seen_at[t.symbol].insert(n);
          if (t.symbol.message == theta) ++desired_occurrences[t.symbol];
        }
      }
    }
    for (const auto& [sym, servers] : seen_at) {
      if (sym.message == theta) continue;
      const auto [a, b] = g.ServersOf(sym.message);
      if (servers != std::set<ServerId>{a, b}) {
        return absl::FailedPreconditionError(absl::StrCat(
            "undesired symbol ", SymbolName(sym),
            " is not queried from both of its servers"));
      }
    }
    for (const auto& [sym, count] : desired_occurrences) {
      if (count != 1) {
        return absl::FailedPreconditionError(
            absl::StrCat("desired symbol ", SymbolName(sym), " appears ",
                         count, " times in one repetition"));
      }
    }
    reps.push_back(*std::move(base));
  }

  // Logical mask of each term occurrence, keyed by (rep, server, position,
  // symbol).
  std::map<std::pair<ServerId, SymbolRef>, MaskKey> desired_key;
  std::map<ServerId, int> desired_seen;
  for (int u = 0; u < x; ++u) {
    for (ServerId n : {si, sj}) {
      const ServerId partner = n == si ? sj : si;
      for (const AnswerForm& af : reps[u].answers[n - 1]) {
        for (const Term& t : af.form.terms()) {
          if (t.symbol.message != theta) continue;
          const int count = desired_seen[n]++;
          MaskKey key;
          key.pool = true;
          if (count < y) {
            key.server = partner;
            key.slot = count;
          } else {
            const int leftover = count - y;
            if (leftover / y >= static_cast<int>(others.size())) {
              return absl::FailedPreconditionError(absl::StrCat(
                  "server ", n, " retrieves more than (N-1)y desired symbols"));
            }
            key.server = others[leftover / y];
            key.slot = leftover % y;
          }
          desired_key[{n, t.symbol}] = key;
        }
      }
    }
  }
  if (desired_seen[si] != x * base_l / 2 || desired_seen[sj] != x * base_l / 2) {
    return absl::FailedPreconditionError(absl::StrCat(
        "desired symbols per storing server: ", desired_seen[si], " and ",
        desired_seen[sj], ", expected ", x * base_l / 2));
  }

  auto key_of = [&](ServerId n, const SymbolRef& s) {
    if (s.message == theta) return desired_key.at({n, s});
    MaskKey key;
    key.symbol = s;
    return key;
  };

  // Number masks by first appearance.
  std::map<MaskKey, int> number;
  for (int u = 0; u < x; ++u) {
    for (ServerId n = 1; n <= n_servers; ++n) {
      for (const AnswerForm& af : reps[u].answers[n - 1]) {
        for (const Term& t : af.form.terms()) {
          const MaskKey key = key_of(n, t.symbol);
          if (!number.contains(key)) {
            const int next = static_cast<int>(number.size()) + 1;
            number.emplace(key, next);
          }
        }
      }
    }
  }
  if (static_cast<int>(number.size()) != params.randomness_count) {
    return absl::FailedPreconditionError(absl::StrCat(
        "mask accounting: ", number.size(), " masks used, expected ",
        params.randomness_count));
  }

  ConvertedInstance out;
  MaskAssignment& masks = out.masks;
  masks.pools.assign(n_servers, std::vector<int>(y, 0));
  for (const auto& [key, index] : number) {
    if (key.pool) {
      masks.pools[key.server - 1][key.slot] = index;
    } else {
      masks.undesired[key.symbol] = index;
    }
  }
  for (const auto& [where, key] : desired_key) {
    masks.desired[where] = number.at(key);
  }

  SchemeInstance& inst = out.instance;
  inst.graph = g;
  inst.field = pir.field();
  inst.theta = theta;
  inst.symbols_per_message = params.symbols_per_message;
  inst.randomness_count = params.randomness_count;
  inst.answers.resize(n_servers);
  for (ServerId n = 1; n <= n_servers; ++n) {
    for (int slot = 0; slot < y; ++slot) {
      inst.answers[n - 1].push_back(
          {LinearForm{SymbolRef::Randomness(masks.pools[n - 1][slot])}, 0});
    }
    for (int u = 0; u < x; ++u) {
      for (const AnswerForm& af : reps[u].answers[n - 1]) {
        LinearForm f = af.form;
        for (const Term& t : af.form.terms()) {
          f.Add(SymbolRef::Randomness(number.at(key_of(n, t.symbol))));
        }
        inst.answers[n - 1].push_back({std::move(f), u + 1});
      }
    }
  }

  // Decode: the PIR plan of repetition u applied to its masked forms yields
  // the desired symbol plus its mask (undesired masks cancel with their
  // symbols); the raw download of that mask removes it.
  std::vector<std::size_t> server_offset(n_servers + 1, 0);
  for (ServerId n = 1; n < n_servers; ++n) {
    server_offset[n] = server_offset[n - 1] + inst.answers[n - 1].size();
  }
  std::map<int, std::size_t> raw_form_of_mask;
  for (ServerId n = 1; n <= n_servers; ++n) {
    for (int slot = 0; slot < y; ++slot) {
      raw_form_of_mask[masks.pools[n - 1][slot]] = server_offset[n - 1] + slot;
    }
  }
  const std::size_t d_total = inst.DownloadCount();
  inst.decode_plan.assign(params.symbols_per_message,
                          std::vector<std::int64_t>(d_total, 0));
  for (int u = 0; u < x; ++u) {
    const SchemeInstance& rep = reps[u];
    const std::vector<FormRef> base_flat = rep.FlatForms();
    for (int l = 1; l <= base_l; ++l) {
      const SymbolRef desired = SymbolRef::Message(theta, u * base_l + l);
      std::vector<std::int64_t>& plan = inst.decode_plan[u * base_l + l - 1];
      const std::vector<std::int64_t>& base_plan = rep.decode_plan[l - 1];
      for (std::size_t f = 0; f < base_flat.size(); ++f) {
        if (base_plan[f] == 0) continue;
        const FormRef& ref = base_flat[f];
        const std::size_t target = server_offset[ref.server - 1] + y +
                                   u * rep.answers[ref.server - 1].size() +
                                   ref.position;
        plan[target] += base_plan[f];
      }
      ServerId holder = si;
      if (!masks.desired.contains({si, desired})) holder = sj;
      const int mask = masks.desired.at({holder, desired});
      plan[raw_form_of_mask.at(mask)] -= 1;
    }
  }
  return out;
}

absl::StatusOr<SchemeFamily> ConvertPirToSpir(const SchemeFamily& pir,
                                              std::uint64_t srp_limit) {
  if (pir.randomness_count() != 0) {
    return absl::FailedPreconditionError(absl::StrCat(
        pir.name(), " already uses randomness (|R| = ",
        pir.randomness_count(), ")"));
  }
  absl::StatusOr<SrpReport> srp = CheckSrp(pir, srp_limit);
  if (!srp.ok()) return srp.status();
  if (!srp->pass) {
    return absl::FailedPreconditionError(absl::StrCat(
        pir.name(), " violates the symmetric retrieval property: ",
        srp->witness));
  }
  absl::StatusOr<ConversionParams> params =
      ComputeConversionParams(pir.symbols_per_message(),
                              pir.graph().server_count(), pir.message_count());
  if (!params.ok()) return params.status();

  SchemeFamily::Shape shape;
  shape.symbols_per_message = params->symbols_per_message;
  shape.randomness_count = params->randomness_count;
  shape.base_symbols = pir.shape().base_symbols;
  shape.base_downloads = pir.shape().base_downloads;
  for (int u = 0; u < params->repetitions; ++u) {
    shape.choice_radices.insert(shape.choice_radices.end(),
                                pir.shape().choice_radices.begin(),
                                pir.shape().choice_radices.end());
  }
  auto base = std::make_shared<const SchemeFamily>(pir);
  auto builder = [base, p = *params](MessageId theta, std::span<const int> choices)
      -> absl::StatusOr<SchemeInstance> {
    absl::StatusOr<ConvertedInstance> c =
        ConvertInstance(*base, p, theta, choices);
    if (!c.ok()) return c.status();
    return std::move(c->instance);
  };
  return SchemeFamily(absl::StrCat("spir(", pir.name(), ")"), pir.graph(),
                      pir.field(), std::move(shape), std::move(builder));
}

absl::StatusOr<SchemeStats> ComputeSchemeStats(const SchemeFamily& family) {
  SchemeStats stats;
  stats.symbols_per_message = family.symbols_per_message();
  const std::vector<int> zeros(family.shape().choice_radices.size(), 0);
  for (MessageId theta = 1; theta <= family.message_count(); ++theta) {
    absl::StatusOr<SchemeInstance> inst = family.Canonical(theta, zeros);
    if (!inst.ok()) return inst.status();
    const std::size_t d = inst->DownloadCount();
    if (theta == 1) {
      stats.downloads = d;
    } else if (d != stats.downloads) {
      return absl::InternalError(absl::StrCat(
          family.name(), ": download count depends on theta (", stats.downloads,
          " for theta=1, ", d, " for theta=", theta, ")"));
    }
  }
  const auto l = static_cast<std::int64_t>(stats.symbols_per_message);
  stats.rate = Rational(l, static_cast<std::int64_t>(stats.downloads));
  stats.rho = Rational(family.randomness_count(), l);
  return stats;
}

}  // namespace spir
