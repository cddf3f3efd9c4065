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

#include "spir/cli.h"

#include <fstream>
#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "spir/audit.h"
#include "spir/capacity.h"
#include "spir/convert.h"
#include "spir/render.h"
#include "spir/schemes.h"

namespace spir {
namespace {

absl::StatusOr<SchemeFamily> ConvertedPath(int n, const PrimeField& field) {
  absl::StatusOr<SchemeFamily> base = PathPirFamily(n, field);
  if (!base.ok()) return base.status();
  return ConvertPirToSpir(*base);
}

absl::StatusOr<SchemeFamily> ConvertedCycle(int n, const PrimeField& field) {
  if (n != 3) {
    return absl::InvalidArgumentError(
        absl::StrCat("no base PIR family for cycle N=", n,
                     " (only N=3 is available)"));
  }
  absl::StatusOr<SchemeFamily> base = Cycle3PirFamily(field);
  if (!base.ok()) return base.status();
  return ConvertPirToSpir(*base);
}

absl::StatusOr<SchemeInstance> CanonicalWith(const SchemeFamily& family,
                                             MessageId theta, int digit) {
  const std::vector<int> choices(family.shape().choice_radices.size(), digit);
  return family.Canonical(theta, choices);
}

absl::StatusOr<std::string> PathExampleTable() {
  absl::StatusOr<SchemeFamily> family =
      ConvertedPath(3, PrimeField::Binary());
  if (!family.ok()) return family.status();
  // The reference table shows b2, b4 for theta=1 and a1, a3 for theta=2.
  absl::StatusOr<SchemeInstance> t1 = CanonicalWith(*family, 1, 1);
  if (!t1.ok()) return t1.status();
  absl::StatusOr<SchemeInstance> t2 = CanonicalWith(*family, 2, 0);
  if (!t2.ok()) return t2.status();
  return absl::StrCat(
      RenderAnswerTable(*t1), "\n", RenderAnswerTable(*t2),
      "note: database 3 returns s2, the mask of b1 at database 2; with s1 "
      "in its place b1 could not be decoded\n");
}

absl::StatusOr<std::string> CycleTable() {
  absl::StatusOr<SchemeFamily> family =
      ConvertedCycle(3, PrimeField::Binary());
  if (!family.ok()) return family.status();
  absl::StatusOr<SchemeInstance> t1 = CanonicalWith(*family, 1, 0);
  if (!t1.ok()) return t1.status();
  return RenderAnswerTable(*t1);
}

absl::StatusOr<std::string> PathCapacityTable() {
  absl::StatusOr<SchemeFamily> family = P3CapacityFamily();
  if (!family.ok()) return family.status();
  std::vector<SchemeInstance> rows;
  for (MessageId theta : {1, 2}) {
    absl::StatusOr<SchemeInstance> inst = CanonicalWith(*family, theta, 0);
    if (!inst.ok()) return inst.status();
    rows.push_back(*std::move(inst));
  }
  return RenderThetaRows(rows);
}

absl::StatusOr<int> ParseInt(std::string_view text, std::string_view what) {
  int v = 0;
  if (!absl::SimpleAtoi(absl::string_view(text.data(), text.size()), &v)) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid ", std::string(what), " '", std::string(text),
                     "'"));
  }
  return v;
}

absl::StatusOr<std::pair<int, int>> ParseRange(const std::string& text) {
  std::vector<std::string> parts = absl::StrSplit(text, "..");
  if (parts.size() == 1) parts.push_back(parts[0]);
  if (parts.size() != 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid range '", text, "'"));
  }
  absl::StatusOr<int> lo = ParseInt(parts[0], "N");
  if (!lo.ok()) return lo.status();
  absl::StatusOr<int> hi = ParseInt(parts[1], "N");
  if (!hi.ok()) return hi.status();
  if (*lo > *hi) {
    return absl::InvalidArgumentError(
        absl::StrCat("empty range '", text, "'"));
  }
  return std::pair{*lo, *hi};
}

absl::StatusOr<int> RequiredN(const RunConfig& config) {
  if (config.n.empty()) return absl::InvalidArgumentError("--n is required");
  return ParseInt(config.n, "N");
}

}  // namespace

absl::StatusOr<std::string> TablesText(std::string_view which) {
  if (which == "p3-example") return PathExampleTable();
  if (which == "c3") return CycleTable();
  if (which == "p3-capacity") return PathCapacityTable();
  if (which != "all") {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown table '", std::string(which),
        "' (expected p3-example, c3, p3-capacity or all)"));
  }
  std::string out;
  for (std::string_view name : {"p3-example", "c3", "p3-capacity"}) {
    absl::StatusOr<std::string> t = TablesText(name);
    if (!t.ok()) return t.status();
    if (!out.empty()) out += "\n";
    absl::StrAppend(&out, "# ", std::string(name), "\n", *t);
  }
  return out;
}

absl::StatusOr<SchemeFamily> FamilyByName(std::string_view scheme, int n,
                                          const PrimeField& field) {
  if (scheme == "p3-capacity") return P3CapacityFamily(field);
  if (scheme == "p3-example") return ConvertedPath(3, field);
  if (scheme == "c3") return ConvertedCycle(3, field);
  if (scheme == "path") return ConvertedPath(n, field);
  if (scheme == "cycle") return ConvertedCycle(n, field);
  return absl::InvalidArgumentError(
      absl::StrCat("unknown scheme '", std::string(scheme),
                   "' (expected p3-capacity, p3-example, c3, path or cycle)"));
}

absl::StatusOr<std::string> ConvertText(const RunConfig& config) {
  absl::StatusOr<PrimeField> field = PrimeField::Create(config.q);
  if (!field.ok()) return field.status();
  absl::StatusOr<int> n = RequiredN(config);
  if (!n.ok()) return n.status();
  absl::StatusOr<GraphKind> kind = ParseGraphKind(config.graph);
  if (!kind.ok()) return kind.status();
  absl::StatusOr<SchemeFamily> base =
      *kind == GraphKind::kPath ? PathPirFamily(*n, *field)
      : *kind == GraphKind::kCycle && *n == 3
          ? Cycle3PirFamily(*field)
          : absl::StatusOr<SchemeFamily>(absl::InvalidArgumentError(
                absl::StrCat("no base PIR family for ", config.graph, " N=",
                             *n)));
  if (!base.ok()) return base.status();
  absl::StatusOr<SchemeFamily> spir = ConvertPirToSpir(*base);
  if (!spir.ok()) return spir.status();
  absl::StatusOr<SchemeStats> base_stats = ComputeSchemeStats(*base);
  if (!base_stats.ok()) return base_stats.status();
  absl::StatusOr<SchemeStats> stats = ComputeSchemeStats(*spir);
  if (!stats.ok()) return stats.status();
  absl::StatusOr<ConversionParams> params = ComputeConversionParams(
      base->symbols_per_message(), *n, base->message_count());
  if (!params.ok()) return params.status();

  std::optional<SchemeInstance> instance;
  if (config.full) {
    if (config.theta < 1 || config.theta > spir->message_count()) {
      return absl::InvalidArgumentError(
          absl::StrCat("--theta must lie in [1, ", spir->message_count(), "]"));
    }
    absl::StatusOr<SchemeInstance> inst =
        CanonicalWith(*spir, config.theta, 0);
    if (!inst.ok()) return inst.status();
    instance = *std::move(inst);
  }

  if (config.format == "json") {
    nlohmann::json j;
    j["scheme"] = spir->name();
    j["graph"] = spir->graph().ToJson();
    j["L_prime"] = base->symbols_per_message();
    j["D_prime"] = base_stats->downloads;
    j["x"] = params->repetitions;
    j["y"] = params->pool_size;
    j["L"] = stats->symbols_per_message;
    j["D"] = stats->downloads;
    j["randomness_count"] = spir->randomness_count();
    j["rate"] = stats->rate.ToString();
    j["rho"] = stats->rho.ToString();
    if (instance) j["instance"] = InstanceToJson(*instance);
    return j.dump(2) + "\n";
  }
  if (!config.format.empty() && config.format != "table" &&
      config.format != "text") {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported format '", config.format, "'"));
  }
  std::string out = absl::StrCat(
      "scheme: ", spir->name(), "\n", "L' = ", base->symbols_per_message(),
      "\n", "D' = ", base_stats->downloads, "\n", "x = ", params->repetitions,
      "\n", "y = ", params->pool_size, "\n", "L = ",
      stats->symbols_per_message, "\n", "D = ", stats->downloads, "\n",
      "|R| = ", spir->randomness_count(), "\n", "rate = ",
      stats->rate.ToString(), "\n", "rho = ", stats->rho.ToString(), "\n");
  if (instance) absl::StrAppend(&out, "\n", RenderAnswerTable(*instance));
  return out;
}

absl::StatusOr<std::string> BoundsText(const RunConfig& config) {
  absl::StatusOr<GraphKind> kind = ParseGraphKind(config.graph);
  if (!kind.ok()) return kind.status();
  if (config.n.empty()) return absl::InvalidArgumentError("--n is required");
  absl::StatusOr<std::pair<int, int>> range = ParseRange(config.n);
  if (!range.ok()) return range.status();
  std::vector<BoundSet> rows;
  for (int n = range->first; n <= range->second; ++n) {
    absl::StatusOr<BoundSet> b = ComputeBoundSet(*kind, n);
    if (!b.ok()) return b.status();
    rows.push_back(*std::move(b));
  }
  if (config.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const BoundSet& b : rows) j.push_back(b.ToJson());
    return j.dump(2) + "\n";
  }
  if (!config.format.empty() && config.format != "csv") {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported format '", config.format, "'"));
  }
  std::string out = "kind,N,graph_replicated,lower,upper,pir\n";
  for (const BoundSet& b : rows) {
    absl::StrAppend(&out, std::string(GraphKindName(b.kind)), ",",
                    b.server_count, ",", b.graph_replicated.ToString(), ",",
                    b.lower.ToString(), ",", b.upper.ToString(), ",",
                    b.pir_capacity.ToString(), "\n");
  }
  return out;
}

absl::StatusOr<std::string> AuditText(const RunConfig& config,
                                      bool* all_pass) {
  absl::StatusOr<PrimeField> field = PrimeField::Create(config.q);
  if (!field.ok()) return field.status();
  int n = 0;
  if (config.scheme == "path" || config.scheme == "cycle") {
    absl::StatusOr<int> parsed = RequiredN(config);
    if (!parsed.ok()) return parsed.status();
    n = *parsed;
  }
  if (config.mode != "exhaustive" && config.mode != "sample") {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown mode '", config.mode, "'"));
  }
  AuditOptions options;
  options.limit = config.limit;
  options.seed = config.seed;
  options.samples = config.samples;
  options.sample = config.mode == "sample";
  if (options.sample && options.samples == 0) {
    return absl::InvalidArgumentError("--samples must be positive");
  }
  absl::StatusOr<SchemeFamily> family = FamilyByName(config.scheme, n, *field);
  if (!family.ok()) return family.status();
  absl::StatusOr<AuditReport> report = RunAudit(*family, options);
  if (!report.ok()) return report.status();
  *all_pass = report->ok();
  if (config.format == "text" || config.format == "table") {
    std::string out = absl::StrCat("scheme: ", report->scheme, "\n");
    for (const CheckResult& c : report->checks) {
      absl::StrAppend(&out, std::string(CheckStatusName(c.status)), " ",
                      c.name);
      if (c.lhs) {
        absl::StrAppend(&out, ": ", c.lhs->ToString(),
                        " >= ", c.rhs->ToString(), " (slack ",
                        c.slack->ToString(), ")");
      }
      if (!c.witness.empty()) absl::StrAppend(&out, " [", c.witness, "]");
      absl::StrAppend(&out, "\n");
    }
    return out;
  }
  if (!config.format.empty() && config.format != "json") {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported format '", config.format, "'"));
  }
  return report->ToJson().dump(2) + "\n";
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Symmetric PIR on graph-replicated storage with shared "
               "randomness"};
  app.require_subcommand(1);
  RunConfig config;

  CLI::App* tables = app.add_subcommand("tables", "Print the answer tables");
  tables->add_option("--which", config.which,
                     "p3-example, c3, p3-capacity or all");

  CLI::App* convert =
      app.add_subcommand("convert", "Convert a base PIR family to SPIR");
  convert->add_option("--graph", config.graph, "path or cycle");
  convert->add_option("--n", config.n, "number of servers")->required();
  convert->add_option("--theta", config.theta, "desired message for --full");
  convert->add_flag("--full", config.full, "print the answer table");
  convert->add_option("--q", config.q, "field size (prime)");
  convert->add_option("--format", config.format, "table or json");

  CLI::App* audit = app.add_subcommand("audit", "Audit a scheme family");
  audit->add_option("--scheme", config.scheme,
                    "p3-capacity, p3-example, c3, path or cycle")
      ->required();
  audit->add_option("--n", config.n, "number of servers (path, cycle)");
  audit->add_option("--mode", config.mode, "exhaustive or sample");
  audit->add_option("--samples", config.samples, "sample size");
  audit->add_option("--seed", config.seed, "sampling seed");
  audit->add_option("--limit", config.limit, "enumeration limit");
  audit->add_option("--q", config.q, "field size (prime)");
  audit->add_option("--format", config.format, "json or text");
  audit->add_option("--output", config.output, "write the report here");

  CLI::App* bounds = app.add_subcommand("bounds", "Capacity bound table");
  bounds->add_option("--kind", config.graph, "path or cycle");
  bounds->add_option("--n", config.n, "N or a range such as 3..6")
      ->required();
  bounds->add_option("--format", config.format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  bool all_pass = true;
  absl::StatusOr<std::string> text;
  if (tables->parsed()) {
    config.command = "tables";
    text = TablesText(config.which);
  } else if (convert->parsed()) {
    config.command = "convert";
    text = ConvertText(config);
  } else if (audit->parsed()) {
    config.command = "audit";
    text = AuditText(config, &all_pass);
  } else {
    config.command = "bounds";
    text = BoundsText(config);
  }
  if (!text.ok()) {
    err << "error: " << text.status().message() << "\n";
    return absl::IsInvalidArgument(text.status()) ? kExitUsage
                                                  : kExitAuditFailure;
  }
  if (config.output.empty()) {
    out << *text;
  } else {
    std::ofstream file(config.output);
    if (!file) {
      err << "error: cannot write " << config.output << "\n";
      return kExitUsage;
    }
    file << *text;
  }
  return all_pass ? kExitOk : kExitAuditFailure;
}

}  // namespace spir
