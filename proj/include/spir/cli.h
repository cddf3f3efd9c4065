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

#ifndef SPIR_CLI_H_
#define SPIR_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "spir/prime_field.h"
#include "spir/scheme.h"

namespace spir {

struct RunConfig {
  std::string command;            // tables | convert | audit | bounds
  std::string which = "all";      // tables
  std::string graph = "path";     // convert, bounds
  std::string scheme;             // audit
  std::string n;                  // N, or a range "3..6" for bounds
  std::uint32_t q = 2;
  int theta = 1;
  bool full = false;
  std::string mode = "exhaustive";  // exhaustive | sample
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  std::uint64_t limit = 1'000'000;
  std::string format;  // table/text, json or csv; empty = command default
  std::string output;  // file path; empty = stdout
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailure = 1;
inline constexpr int kExitUsage = 2;

// The three reference answer tables under identity permutations:
// "p3-example", "c3", "p3-capacity", or "all".
absl::StatusOr<std::string> TablesText(std::string_view which);

// Families by CLI name: p3-capacity, p3-example, c3, path (needs n), cycle.
absl::StatusOr<SchemeFamily> FamilyByName(std::string_view scheme, int n,
                                          const PrimeField& field);

absl::StatusOr<std::string> ConvertText(const RunConfig& config);
absl::StatusOr<std::string> BoundsText(const RunConfig& config);
// Sets *all_pass to whether no audit check failed.
absl::StatusOr<std::string> AuditText(const RunConfig& config, bool* all_pass);

// Parses argv and runs the selected command.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace spir

#endif  // SPIR_CLI_H_
