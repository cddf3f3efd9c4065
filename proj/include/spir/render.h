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

#ifndef SPIR_RENDER_H_
#define SPIR_RENDER_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "spir/scheme.h"

namespace spir {

// Answer table of one instance, one row per round:
//
//   theta=1 | database 1 | database 2 | database 3
//   raw | s2 | s1 | s4
//   rep. 1 | a1+s1 | a2+b2+s2+s3 | b2+s3
//
// Forms of one server within a round are separated by ", ". The raw row holds
// round-0 forms and is omitted when there are none.
std::string RenderAnswerTable(const SchemeInstance& instance);

// One row per instance, all of a server's forms in one cell:
//
//   theta | database 1 | database 2 | database 3
//   theta=1 | a1+s1 | s1, a2+b2+s2 | b2+s2
std::string RenderThetaRows(const std::vector<SchemeInstance>& instances);

// {theta, realization_id, L, randomness_count, servers, decode_plan}.
nlohmann::json InstanceToJson(const SchemeInstance& instance);

}  // namespace spir

#endif  // SPIR_RENDER_H_
