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

#include "spir/graph.h"

#include <algorithm>
#include <cassert>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spir {

std::string_view GraphKindName(GraphKind kind) {
  switch (kind) {
    case GraphKind::kPath:
      return "path";
    case GraphKind::kCycle:
      return "cycle";
    case GraphKind::kGeneric:
      return "generic";
  }
  return "unknown";
}

absl::StatusOr<GraphKind> ParseGraphKind(std::string_view name) {
  if (name == "path") return GraphKind::kPath;
  if (name == "cycle") return GraphKind::kCycle;
  if (name == "generic") return GraphKind::kGeneric;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown graph kind '", std::string(name), "'"));
}

absl::StatusOr<Graph> Graph::Build(GraphKind kind, int server_count) {
  switch (kind) {
    case GraphKind::kPath: {
      if (server_count < 2) {
        return absl::InvalidArgumentError(
            absl::StrCat("path graph needs N >= 2, got ", server_count));
      }
      std::vector<Edge> edges;
      for (int n = 1; n < server_count; ++n) edges.push_back({n, n + 1});
      return Graph(kind, server_count, std::move(edges));
    }
    case GraphKind::kCycle: {
      if (server_count < 3) {
        return absl::InvalidArgumentError(
            absl::StrCat("cycle graph needs N >= 3, got ", server_count));
      }
      std::vector<Edge> edges;
      for (int n = 1; n < server_count; ++n) edges.push_back({n, n + 1});
      edges.push_back({server_count, 1});
      return Graph(kind, server_count, std::move(edges));
    }
    case GraphKind::kGeneric:
      break;
  }
  return absl::InvalidArgumentError(
      "only path and cycle graphs have a canonical constructor");
}

Graph Graph::FromEdges(int server_count, std::vector<Edge> edges) {
  return Graph(GraphKind::kGeneric, server_count, std::move(edges));
}

std::pair<ServerId, ServerId> Graph::ServersOf(MessageId k) const {
  assert(k >= 1 && k <= message_count());
  const Edge& e = edges_[k - 1];
  return {e.first, e.second};
}

std::vector<MessageId> Graph::StorageOf(ServerId n) const {
  std::vector<MessageId> out;
  for (MessageId k = 1; k <= message_count(); ++k) {
    if (Stores(n, k)) out.push_back(k);
  }
  return out;
}

bool Graph::Stores(ServerId n, MessageId k) const {
  if (k < 1 || k > message_count()) return false;
  const Edge& e = edges_[k - 1];
  return e.first == n || e.second == n;
}

nlohmann::json Graph::ToJson() const {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : edges_) edges.push_back({e.first, e.second});
  return {{"kind", GraphKindName(kind_)},
          {"N", server_count_},
          {"edges", std::move(edges)}};
}

std::optional<GraphViolation> ValidateGraph(const Graph& graph) {
  using Kind = GraphViolation::Kind;
  const int n = graph.server_count();
  if (n < 2) {
    return GraphViolation{Kind::kTooFewServers,
                          absl::StrCat("need at least 2 servers, got ", n)};
  }
  if (graph.message_count() == 0) {
    return GraphViolation{Kind::kNoMessages, "graph has no edges"};
  }
  std::set<std::pair<int, int>> seen;
  for (MessageId k = 1; k <= graph.message_count(); ++k) {
    const Edge& e = graph.edges()[k - 1];
    if (e.first < 1 || e.first > n || e.second < 1 || e.second > n) {
      return GraphViolation{
          Kind::kServerOutOfRange,
          absl::StrCat("edge ", k, " (", e.first, ",", e.second,
                       ") references a server outside [1, ", n, "]")};
    }
    if (e.first == e.second) {
      return GraphViolation{Kind::kSelfLoop,
                            absl::StrCat("edge ", k, " is a self-loop on ",
                                         e.first)};
    }
    auto key = std::minmax(e.first, e.second);
    if (!seen.insert(key).second) {
      return GraphViolation{
          Kind::kDuplicateEdge,
          absl::StrCat("edge ", k, " (", e.first, ",", e.second,
                       ") duplicates an earlier edge")};
    }
  }
  // Connectivity by flood fill from server 1.
  std::vector<bool> reached(n + 1, false);
  std::vector<ServerId> stack = {1};
  reached[1] = true;
  while (!stack.empty()) {
    const ServerId s = stack.back();
    stack.pop_back();
    for (const Edge& e : graph.edges()) {
      ServerId other = 0;
      if (e.first == s) other = e.second;
      if (e.second == s) other = e.first;
      if (other != 0 && !reached[other]) {
        reached[other] = true;
        stack.push_back(other);
      }
    }
  }
  for (ServerId s = 1; s <= n; ++s) {
    if (!reached[s]) {
      return GraphViolation{
          Kind::kDisconnected,
          absl::StrCat("server ", s, " is not reachable from server 1")};
    }
  }
  return std::nullopt;
}

}  // namespace spir
