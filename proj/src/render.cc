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

#include "spir/render.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace spir {
namespace {

std::string Header(std::string first, int server_count) {
  std::vector<std::string> cells = {std::move(first)};
  for (int n = 1; n <= server_count; ++n) {
    cells.push_back(absl::StrCat("database ", n));
  }
  return absl::StrJoin(cells, " | ");
}

std::string Cell(const std::vector<AnswerForm>& forms, int round, bool all) {
  std::vector<std::string> parts;
  for (const AnswerForm& af : forms) {
    if (all || af.round == round) parts.push_back(af.form.ToString());
  }
  return absl::StrJoin(parts, ", ");
}

}  // namespace

std::string RenderAnswerTable(const SchemeInstance& instance) {
  const int n_servers = static_cast<int>(instance.answers.size());
  int max_round = 0;
  bool has_raw = false;
  for (const auto& server : instance.answers) {
    for (const AnswerForm& af : server) {
      max_round = std::max(max_round, af.round);
      has_raw = has_raw || af.round == 0;
    }
  }
  std::string out =
      absl::StrCat(Header(absl::StrCat("theta=", instance.theta), n_servers),
                   "\n");
  for (int round = has_raw ? 0 : 1; round <= max_round; ++round) {
    std::vector<std::string> cells = {
        round == 0 ? std::string("raw") : absl::StrCat("rep. ", round)};
    for (const auto& server : instance.answers) {
      cells.push_back(Cell(server, round, false));
    }
    absl::StrAppend(&out, absl::StrJoin(cells, " | "), "\n");
  }
  return out;
}

std::string RenderThetaRows(const std::vector<SchemeInstance>& instances) {
  if (instances.empty()) return "";
  const int n_servers = static_cast<int>(instances.front().answers.size());
  std::string out = absl::StrCat(Header("theta", n_servers), "\n");
  for (const SchemeInstance& inst : instances) {
    std::vector<std::string> cells = {absl::StrCat("theta=", inst.theta)};
    for (const auto& server : inst.answers) {
      cells.push_back(Cell(server, 0, true));
    }
    absl::StrAppend(&out, absl::StrJoin(cells, " | "), "\n");
  }
  return out;
}

nlohmann::json InstanceToJson(const SchemeInstance& instance) {
  nlohmann::json j;
  j["theta"] = instance.theta;
  j["realization_id"] = instance.realization_id.str();
  j["L"] = instance.symbols_per_message;
  j["randomness_count"] = instance.randomness_count;
  j["q"] = instance.field.modulus();
  nlohmann::json servers = nlohmann::json::array();
  for (const auto& server : instance.answers) {
    nlohmann::json forms = nlohmann::json::array();
    for (const AnswerForm& af : server) forms.push_back(af.form.ToString());
    servers.push_back(std::move(forms));
  }
  j["servers"] = std::move(servers);
  j["decode_plan"] = instance.decode_plan;
  return j;
}

}  // namespace spir
