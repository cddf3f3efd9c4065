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

#include "spir/audit.h"

#include <functional>
#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace spir {

std::string_view CheckStatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSampledPass:
      return "sampled-pass";
  }
  return "unknown";
}

nlohmann::json CheckResult::ToJson() const {
  nlohmann::json j;
  j["name"] = name;
  j["status"] = std::string(CheckStatusName(status));
  if (lhs) j["lhs"] = lhs->ToString();
  if (rhs) j["rhs"] = rhs->ToString();
  if (slack) j["slack"] = slack->ToString();
  if (!coverage.empty()) j["coverage"] = coverage;
  if (!witness.empty()) j["witness"] = witness;
  return j;
}

bool AuditReport::ok() const {
  for (const CheckResult& c : checks) {
    if (c.status == CheckStatus::kFail) return false;
  }
  return true;
}

const CheckResult* AuditReport::Find(std::string_view name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json AuditReport::ToJson() const {
  nlohmann::json j;
  j["scheme"] = scheme;
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks) j["checks"].push_back(c.ToJson());
  return j;
}

RealizationSequence SelectRealizations(const RealizationSpace& space,
                                       const AuditOptions& options,
                                       std::uint64_t enumerate_limit) {
  if (options.sample) {
    return SampleRealizations(space, options.samples, options.seed);
  }
  if (space.size() <= enumerate_limit) {
    return EnumerateRealizations(space, enumerate_limit, options.seed);
  }
  if (space.choice_count() <= options.limit) return OrbitRepresentatives(space);
  return SampleRealizations(space, options.samples, options.seed);
}

namespace {

std::string CoverageNote(const RealizationSequence& seq) {
  return absl::StrCat(std::string(CoverageName(seq.coverage())), " (", seq.size(),
                      " realizations per theta)");
}

std::vector<std::uint32_t> UnitVector(std::size_t size, std::size_t at) {
  std::vector<std::uint32_t> v(size, 0);
  v[at] = 1;
  return v;
}

}  // namespace

ReliabilityResult VerifyReliability(const SchemeInstance& instance) {
  ReliabilityResult result;
  const FieldMatrix m = CoefficientMatrix(instance);
  const SourceLayout layout = SourceLayout::Of(instance);
  const int l_count = instance.symbols_per_message;
  const auto& plan = instance.decode_plan;
  if (!plan.empty() && plan.size() != static_cast<std::size_t>(l_count)) {
    result.witness = absl::StrCat("decode plan has ", plan.size(),
                                  " rows, expected ", l_count);
    return result;
  }
  for (int l = 1; l <= l_count; ++l) {
    const SymbolRef desired = SymbolRef::Message(instance.theta, l);
    const std::vector<std::uint32_t> target =
        UnitVector(layout.total(), layout.Column(desired));
    std::optional<std::vector<std::uint32_t>> x = m.SolveLeft(target);
    if (!x.has_value()) {
      result.witness =
          absl::StrCat(SymbolName(desired), " is not in the span of the answers");
      return result;
    }
    result.certificate.push_back(*std::move(x));
    if (plan.empty()) continue;
    const std::vector<std::int64_t>& row = plan[l - 1];
    if (row.size() != m.rows()) {
      result.witness = absl::StrCat("decode plan row for ", SymbolName(desired),
                                    " has ", row.size(), " entries, expected ",
                                    m.rows());
      return result;
    }
    std::vector<std::uint32_t> coeffs(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      coeffs[i] = instance.field.Reduce(row[i]);
    }
    if (m.LeftMultiply(coeffs) != target) {
      result.witness = absl::StrCat("decode plan for ", SymbolName(desired),
                                    " does not evaluate to it");
      return result;
    }
  }
  result.pass = true;
  return result;
}

DatabasePrivacyResult VerifyDatabasePrivacy(const SchemeInstance& instance) {
  DatabasePrivacyResult result;
  const FieldMatrix m = CoefficientMatrix(instance);
  const SourceLayout layout = SourceLayout::Of(instance);
  std::vector<bool> undesired(layout.total(), false);
  for (MessageId k = 1; k <= layout.message_count(); ++k) {
    if (k == instance.theta) continue;
    for (std::size_t c : layout.MessageColumns(k)) undesired[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < layout.total(); ++c) {
    if (!undesired[c]) keep.push_back(c);
  }
  result.rank_all = static_cast<int>(m.Rank());
  result.rank_without_undesired = static_cast<int>(m.SelectColumns(keep).Rank());
  result.pass = result.rank_all == result.rank_without_undesired;
  if (!result.pass) {
    result.witness = absl::StrCat(
        "answers reveal ", result.rank_all - result.rank_without_undesired,
        " symbol(s) of information about undesired messages");
    for (std::size_t c = 0; c < layout.total(); ++c) {
      if (undesired[c] && m.SolveLeft(UnitVector(layout.total(), c))) {
        absl::StrAppend(&result.witness, "; ",
                        SymbolName(layout.SymbolAt(c)), " exposed");
        break;
      }
    }
  }
  return result;
}

namespace {

std::string RenderView(const std::vector<AnswerForm>& forms,
                       const std::function<SymbolRef(const SymbolRef&)>& map) {
  std::vector<std::string> parts;
  for (const AnswerForm& af : forms) {
    LinearForm f;
    for (const Term& t : af.form.terms()) f.Add(map(t.symbol), t.coeff);
    parts.push_back(absl::StrCat(af.round, ":", f.ToString()));
  }
  return absl::StrJoin(parts, " | ");
}

}  // namespace

std::string ServerView(const SchemeInstance& instance, ServerId n) {
  return RenderView(instance.answers[n - 1],
                    [](const SymbolRef& s) { return s; });
}

std::string CanonicalServerView(const SchemeInstance& instance, ServerId n) {
  std::map<SymbolRef, SymbolRef> renamed;
  std::map<MessageId, int> next_index;
  int next_randomness = 0;
  return RenderView(instance.answers[n - 1], [&](const SymbolRef& s) {
    auto it = renamed.find(s);
    if (it != renamed.end()) return it->second;
    const SymbolRef r =
        s.is_message() ? SymbolRef::Message(s.message, ++next_index[s.message])
                       : SymbolRef::Randomness(++next_randomness);
    renamed.emplace(s, r);
    return r;
  });
}

namespace {

using ViewTable = std::vector<std::map<std::string, std::int64_t>>;

// Visits every instance of `theta` along `seq`; `visit` may stop the scan by
// returning false.
absl::Status ForEachInstance(
    const SchemeFamily& family, MessageId theta, const RealizationSequence& seq,
    const std::function<bool(const SchemeInstance&, const RealizationId&)>&
        visit) {
  for (std::uint64_t t = 0; t < seq.size(); ++t) {
    const RealizationId id = seq.At(t);
    absl::StatusOr<SchemeInstance> inst = family.Generate(theta, id);
    if (!inst.ok()) return inst.status();
    if (!visit(*inst, id)) break;
  }
  return absl::OkStatus();
}

void AddViews(const SchemeInstance& inst, bool canonical, ViewTable& table) {
  for (ServerId n = 1; n <= static_cast<ServerId>(table.size()); ++n) {
    ++table[n - 1][canonical ? CanonicalServerView(inst, n)
                             : ServerView(inst, n)];
  }
}

// Empty when the tables agree; otherwise a description of one difference.
// Sampled tables are compared as sets.
std::string CompareViews(const ViewTable& a, const ViewTable& b, MessageId ta,
                         MessageId tb, bool as_sets) {
  for (std::size_t n = 0; n < a.size(); ++n) {
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> merged;
    for (const auto& [view, count] : a[n]) merged[view].first = count;
    for (const auto& [view, count] : b[n]) merged[view].second = count;
    for (const auto& [view, counts] : merged) {
      const bool differ = as_sets ? (counts.first == 0) != (counts.second == 0)
                                  : counts.first != counts.second;
      if (differ) {
        return absl::StrCat("server ", n + 1, ": view [", view, "] occurs ",
                            counts.first, " times under theta=", ta, " and ",
                            counts.second, " times under theta=", tb);
      }
    }
  }
  return "";
}

CheckStatus PassStatus(bool pass, bool sampled) {
  if (!pass) return CheckStatus::kFail;
  return sampled ? CheckStatus::kSampledPass : CheckStatus::kPass;
}

}  // namespace

absl::StatusOr<UserPrivacyResult> VerifyUserPrivacy(
    const SchemeFamily& family, MessageId theta, MessageId theta_prime,
    const AuditOptions& options) {
  for (MessageId t : {theta, theta_prime}) {
    if (t < 1 || t > family.message_count()) {
      return absl::InvalidArgumentError(absl::StrCat("theta = ", t,
                                                     " out of range"));
    }
  }
  const RealizationSequence seq =
      SelectRealizations(family.space(), options, options.limit);
  const bool canonical = seq.coverage() != Coverage::kEnumerated;
  const int n_servers = family.graph().server_count();
  ViewTable a(n_servers);
  ViewTable b(n_servers);
  for (auto [t, table] : {std::pair{theta, &a}, std::pair{theta_prime, &b}}) {
    absl::Status s = ForEachInstance(
        family, t, seq, [&](const SchemeInstance& inst, const RealizationId&) {
          AddViews(inst, canonical, *table);
          return true;
        });
    if (!s.ok()) return s;
  }
  UserPrivacyResult result;
  result.coverage = seq.coverage();
  result.realizations = seq.size();
  result.witness = CompareViews(a, b, theta, theta_prime, seq.sampled());
  result.status = PassStatus(result.witness.empty(), seq.sampled());
  return result;
}

absl::StatusOr<std::vector<CheckResult>> AuditFeasibility(
    const SchemeFamily& family, const AuditOptions& options) {
  const RealizationSequence seq =
      SelectRealizations(family.space(), options, options.limit);
  const bool canonical = seq.coverage() != Coverage::kEnumerated;
  const int n_servers = family.graph().server_count();
  const std::string coverage = CoverageNote(seq);

  CheckResult reliability{.name = "reliability", .coverage = coverage};
  CheckResult db_privacy{.name = "database_privacy", .coverage = coverage};
  std::vector<CheckResult> user_privacy;
  ViewTable first(n_servers);
  for (MessageId theta = 1; theta <= family.message_count(); ++theta) {
    ViewTable table(n_servers);
    absl::Status s = ForEachInstance(
        family, theta, seq,
        [&](const SchemeInstance& inst, const RealizationId& id) {
          if (reliability.witness.empty()) {
            ReliabilityResult r = VerifyReliability(inst);
            if (!r.pass) {
              reliability.witness = absl::StrCat(
                  "theta=", theta, " realization=", id.str(), ": ", r.witness);
            }
          }
          if (db_privacy.witness.empty()) {
            DatabasePrivacyResult d = VerifyDatabasePrivacy(inst);
            if (!d.pass) {
              db_privacy.witness = absl::StrCat(
                  "theta=", theta, " realization=", id.str(), ": ", d.witness);
            }
          }
          AddViews(inst, canonical, table);
          return true;
        });
    if (!s.ok()) return s;
    if (theta == 1) {
      first = std::move(table);
      continue;
    }
    CheckResult up{.name = absl::StrCat("user_privacy theta=1 vs theta=", theta),
                   .coverage = coverage};
    up.witness = CompareViews(first, table, 1, theta, seq.sampled());
    up.status = PassStatus(up.witness.empty(), seq.sampled());
    user_privacy.push_back(std::move(up));
  }
  reliability.status = PassStatus(reliability.witness.empty(), seq.sampled());
  db_privacy.status = PassStatus(db_privacy.witness.empty(), seq.sampled());
  std::vector<CheckResult> out = {std::move(reliability),
                                  std::move(db_privacy)};
  for (CheckResult& c : user_privacy) out.push_back(std::move(c));
  return out;
}

EntropyQuery ToEntropyQuery(const SchemeInstance& instance,
                            const AnswerQuery& query) {
  EntropyQuery q;
  for (ServerId n : query.servers) {
    const std::vector<std::size_t> idx = instance.ServerFormIndices(n);
    q.forms.insert(q.forms.end(), idx.begin(), idx.end());
  }
  for (ServerId n : query.given_servers) {
    const std::vector<std::size_t> idx = instance.ServerFormIndices(n);
    q.given_forms.insert(q.given_forms.end(), idx.begin(), idx.end());
  }
  q.given_blocks = query.given_blocks;
  return q;
}

absl::StatusOr<std::vector<Rational>> AverageEntropies(
    const SchemeFamily& family, MessageId theta,
    const std::vector<AnswerQuery>& queries, const RealizationSequence& seq) {
  if (seq.size() == 0) {
    return absl::InvalidArgumentError("empty realization sequence");
  }
  std::vector<std::int64_t> sums(queries.size(), 0);
  absl::Status s = ForEachInstance(
      family, theta, seq, [&](const SchemeInstance& inst, const RealizationId&) {
        const FieldMatrix m = CoefficientMatrix(inst);
        const SourceLayout layout = SourceLayout::Of(inst);
        for (std::size_t i = 0; i < queries.size(); ++i) {
          sums[i] += LinearEntropy(m, layout, ToEntropyQuery(inst, queries[i]));
        }
        return true;
      });
  if (!s.ok()) return s;
  std::vector<Rational> out;
  out.reserve(sums.size());
  const auto count = static_cast<std::int64_t>(seq.size());
  for (std::int64_t sum : sums) out.emplace_back(sum, count);
  return out;
}

namespace {

// coeff * H(query) evaluated under `theta`.
struct EntropyTerm {
  MessageId theta;
  AnswerQuery query;
  Rational coeff;
};

// sum(lhs) + lhs_const >= sum(rhs) + rhs_const.
struct Inequality {
  std::string name;
  std::vector<EntropyTerm> lhs;
  Rational lhs_const;
  std::vector<EntropyTerm> rhs;
  Rational rhs_const;
};

std::vector<ServerId> Range(int from, int to) {
  std::vector<ServerId> v;
  for (int n = from; n <= to; ++n) v.push_back(n);
  return v;
}

std::vector<ServerId> AllBut(int count, int skip) {
  std::vector<ServerId> v;
  for (int n = 1; n <= count; ++n) {
    if (n != skip) v.push_back(n);
  }
  return v;
}

EntropyTerm H(MessageId theta, std::vector<ServerId> servers,
              Rational coeff = 1) {
  return {theta, AnswerQuery{.servers = std::move(servers)}, coeff};
}

EntropyTerm HGiven(MessageId theta, std::vector<ServerId> servers,
                   std::vector<ServerId> given_servers,
                   std::vector<SourceBlock> given_blocks) {
  return {theta,
          AnswerQuery{.servers = std::move(servers),
                      .given_servers = std::move(given_servers),
                      .given_blocks = std::move(given_blocks)},
          Rational(1)};
}

std::vector<SourceBlock> OtherMessages(int message_count, MessageId k) {
  std::vector<SourceBlock> b;
  for (MessageId m = 1; m <= message_count; ++m) {
    if (m != k) b.push_back(SourceBlock::Message(m));
  }
  return b;
}

std::vector<Inequality> ConverseInequalities(const SchemeFamily& family) {
  const Graph& g = family.graph();
  const int n_servers = g.server_count();
  const int k_count = g.message_count();
  const Rational l(family.symbols_per_message());
  const Rational half_l = l / Rational(2);
  const Rational r(family.randomness_count());
  std::vector<Inequality> out;

  for (MessageId k = 1; k <= k_count; ++k) {
    out.push_back({.name = absl::StrCat("randomness_lower_bound theta=", k),
                   .lhs_const = r,
                   .rhs = {H(k, Range(1, n_servers))},
                   .rhs_const = -l});
    const auto [i, j] = g.ServersOf(k);
    std::vector<SourceBlock> hidden = OtherMessages(k_count, k);
    hidden.push_back(SourceBlock::Randomness());
    out.push_back({.name = absl::StrCat("storing_pair_bound theta=", k),
                   .lhs = {HGiven(k, {i}, {}, hidden), HGiven(k, {j}, {}, hidden)},
                   .rhs_const = l});
  }

  const bool path = g.kind() == GraphKind::kPath;
  const bool cycle = g.kind() == GraphKind::kCycle;
  if (!path && !cycle) return out;

  auto conditional = [&](ServerId n, MessageId k, Rational bound) {
    out.push_back({.name = absl::StrCat("conditional_answer_bound server=", n,
                                        " theta=", k),
                   .lhs = {HGiven(k, AllBut(n_servers, n), {n},
                                  {SourceBlock::Message(k)})},
                   .rhs_const = bound});
  };
  if (path) {
    conditional(1, 1, Rational(n_servers - 2) * half_l);
    conditional(n_servers, k_count, Rational(n_servers - 2) * half_l);
    for (ServerId n = 2; n <= n_servers - 1; ++n) {
      for (MessageId k : {n - 1, n}) {
        conditional(n, k, Rational(n_servers - 3) * half_l);
      }
    }
  } else {
    for (ServerId n = 1; n <= n_servers; ++n) {
      for (MessageId k : {n == 1 ? n_servers : n - 1, n}) {
        conditional(n, k, Rational(n_servers - 2) * half_l);
      }
    }
  }

  for (MessageId k = 1; k <= k_count; ++k) {
    for (ServerId n = 1; n <= n_servers; ++n) {
      Inequality ineq{.name = absl::StrCat("download_bound_without_server n=",
                                           n, " theta=", k)};
      for (ServerId m : AllBut(n_servers, n)) ineq.lhs.push_back(H(k, {m}));
      const bool edge = path && (n == 1 || n == n_servers);
      ineq.rhs_const = (cycle || edge) ? Rational(n_servers) * half_l
                                       : Rational(n_servers - 1) * half_l;
      out.push_back(std::move(ineq));
    }
    Inequality total{.name = absl::StrCat("total_download_bound theta=", k)};
    for (ServerId n = 1; n <= n_servers; ++n) {
      total.lhs.push_back(H(k, {n}, Rational(n_servers - 1)));
    }
    const int nn = n_servers * n_servers;
    total.rhs_const = path ? Rational(nn - n_servers + 2) * half_l
                           : Rational(nn) * half_l;
    out.push_back(std::move(total));
  }

  if (path && n_servers == 3) {
    const std::vector<ServerId> all = {1, 2, 3};
    out.push_back({.name = "path3_servers_2_3 theta=1",
                   .lhs = {H(1, {2}), H(1, {3})},
                   .rhs_const = Rational(3) * half_l});
    out.push_back({.name = "path3_servers_1_2 theta=2",
                   .lhs = {H(2, {1}), H(2, {2})},
                   .rhs_const = Rational(3) * half_l});
    for (MessageId k : {1, 2}) {
      out.push_back({.name = absl::StrCat("path3_edge_servers theta=", k),
                     .lhs = {H(k, {1}), H(k, {3})},
                     .rhs_const = l});
      out.push_back({.name = absl::StrCat("path3_download_sum theta=", k),
                     .lhs = {H(k, {1}, 2), H(k, {2}, 2), H(k, {3}, 2)},
                     .rhs_const = Rational(4) * l});
    }
    const std::vector<SourceBlock> w1_r = {SourceBlock::Message(1),
                                           SourceBlock::Randomness()};
    for (ServerId n : {2, 3}) {
      out.push_back(
          {.name = absl::StrCat("path3_retrieval_chain server=", n),
           .lhs = {H(1, all), H(1, {1}, -1),
                   {2, AnswerQuery{.servers = {n}, .given_blocks = w1_r},
                    Rational(-1)}},
           .rhs_const = l});
    }
    for (MessageId k : {1, 2}) {
      out.push_back(
          {.name = absl::StrCat("path3_randomness_chain server=1 theta=", k),
           .lhs = {H(1, all)},
           .lhs_const = -l,
           .rhs = {H(k, {1})},
           .rhs_const = half_l});
      out.push_back(
          {.name = absl::StrCat("path3_randomness_chain server=2 theta=", k),
           .lhs = {H(k, all)},
           .lhs_const = -l,
           .rhs = {H(k, {2})}});
      out.push_back(
          {.name = absl::StrCat("path3_randomness_chain server=3 theta=", k),
           .lhs = {H(2, all)},
           .lhs_const = -l,
           .rhs = {H(k, {3})},
           .rhs_const = half_l});
    }
    out.push_back({.name = "path3_randomness_ratio",
                   .lhs_const = r,
                   .rhs_const = l});
  }
  return out;
}

// Message subsets J for the invariance check: all of them for small K,
// otherwise the empty set, singletons, co-singletons and everything.
std::vector<std::vector<SourceBlock>> InvarianceSubsets(int k_count) {
  std::vector<std::vector<SourceBlock>> out;
  if (k_count <= 3) {
    for (int mask = 0; mask < (1 << k_count); ++mask) {
      auto& subset = out.emplace_back();
      for (MessageId k = 1; k <= k_count; ++k) {
        if (mask & (1 << (k - 1))) subset.push_back(SourceBlock::Message(k));
      }
    }
    return out;
  }
  out.emplace_back();
  for (MessageId k = 1; k <= k_count; ++k) {
    out.push_back({SourceBlock::Message(k)});
    out.push_back(OtherMessages(k_count, k));
  }
  auto& all = out.emplace_back();
  for (MessageId k = 1; k <= k_count; ++k) {
    all.push_back(SourceBlock::Message(k));
  }
  return out;
}

std::string BlocksName(const std::vector<SourceBlock>& blocks) {
  std::vector<std::string> names;
  for (const SourceBlock& b : blocks) names.push_back(SourceBlockName(b));
  return names.empty() ? "nothing" : absl::StrJoin(names, ",");
}

}  // namespace

absl::StatusOr<std::vector<CheckResult>> AuditConverse(
    const SchemeFamily& family, const AuditOptions& options) {
  const RealizationSequence seq =
      SelectRealizations(family.space(), options, options.converse_limit);
  const std::string coverage = CoverageNote(seq);
  const int k_count = family.message_count();
  const int n_servers = family.graph().server_count();
  const std::vector<Inequality> inequalities = ConverseInequalities(family);

  // Invariance queries: H(A_n | W_J) and H(A_n | W_J, R).
  std::vector<AnswerQuery> invariance;
  for (ServerId n = 1; n <= n_servers; ++n) {
    for (const std::vector<SourceBlock>& subset : InvarianceSubsets(k_count)) {
      invariance.push_back({.servers = {n}, .given_blocks = subset});
      std::vector<SourceBlock> with_r = subset;
      with_r.push_back(SourceBlock::Randomness());
      invariance.push_back({.servers = {n}, .given_blocks = with_r});
    }
  }

  // Deduplicate queries per theta and evaluate each theta in one pass.
  std::vector<std::map<AnswerQuery, std::size_t>> index(k_count + 1);
  std::vector<std::vector<AnswerQuery>> queries(k_count + 1);
  auto need = [&](MessageId theta, const AnswerQuery& q) {
    auto [it, inserted] = index[theta].emplace(q, queries[theta].size());
    if (inserted) queries[theta].push_back(q);
  };
  for (const Inequality& ineq : inequalities) {
    for (const auto* side : {&ineq.lhs, &ineq.rhs}) {
      for (const EntropyTerm& t : *side) need(t.theta, t.query);
    }
  }
  for (MessageId theta = 1; theta <= k_count; ++theta) {
    for (const AnswerQuery& q : invariance) need(theta, q);
  }
  std::vector<std::vector<Rational>> values(k_count + 1);
  for (MessageId theta = 1; theta <= k_count; ++theta) {
    absl::StatusOr<std::vector<Rational>> v =
        AverageEntropies(family, theta, queries[theta], seq);
    if (!v.ok()) return v.status();
    values[theta] = *std::move(v);
  }
  auto value = [&](MessageId theta, const AnswerQuery& q) {
    return values[theta][index[theta].at(q)];
  };
  auto evaluate = [&](const std::vector<EntropyTerm>& terms, Rational c) {
    for (const EntropyTerm& t : terms) c += t.coeff * value(t.theta, t.query);
    return c;
  };

  std::vector<CheckResult> out;
  CheckResult inv{.name = "answer_entropy_theta_invariance",
                  .coverage = coverage};
  for (const AnswerQuery& q : invariance) {
    const Rational base = value(1, q);
    for (MessageId theta = 2; theta <= k_count && inv.witness.empty();
         ++theta) {
      if (value(theta, q) != base) {
        inv.witness = absl::StrCat(
            "H(A_", q.servers[0], " | ", BlocksName(q.given_blocks), ") = ",
            base.ToString(), " for theta=1 but ", value(theta, q).ToString(),
            " for theta=", theta);
      }
    }
  }
  inv.status = PassStatus(inv.witness.empty(), seq.sampled());
  out.push_back(std::move(inv));

  for (const Inequality& ineq : inequalities) {
    CheckResult c{.name = ineq.name, .coverage = coverage};
    c.lhs = evaluate(ineq.lhs, ineq.lhs_const);
    c.rhs = evaluate(ineq.rhs, ineq.rhs_const);
    c.slack = *c.lhs - *c.rhs;
    const bool holds = *c.slack >= Rational(0);
    if (!holds) {
      c.witness = absl::StrCat("lhs ", c.lhs->ToString(), " < rhs ",
                               c.rhs->ToString());
    }
    c.status = PassStatus(holds, seq.sampled());
    out.push_back(std::move(c));
  }
  return out;
}

absl::StatusOr<AuditReport> RunAudit(const SchemeFamily& family,
                                     const AuditOptions& options) {
  AuditReport report;
  report.scheme = family.name();
  absl::StatusOr<std::vector<CheckResult>> feasibility =
      AuditFeasibility(family, options);
  if (!feasibility.ok()) return feasibility.status();
  absl::StatusOr<std::vector<CheckResult>> converse =
      AuditConverse(family, options);
  if (!converse.ok()) return converse.status();
  report.checks = *std::move(feasibility);
  for (CheckResult& c : *converse) report.checks.push_back(std::move(c));
  return report;
}

}  // namespace spir
