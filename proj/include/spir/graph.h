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

#ifndef SPIR_GRAPH_H_
#define SPIR_GRAPH_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"

namespace spir {

// Servers and messages are 1-indexed throughout.
using ServerId = int;
using MessageId = int;

enum class GraphKind { kPath, kCycle, kGeneric };

std::string_view GraphKindName(GraphKind kind);
absl::StatusOr<GraphKind> ParseGraphKind(std::string_view name);

struct Edge {
  ServerId first;
  ServerId second;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Storage topology: vertices are servers, edge k is the pair of servers
// holding message W_k.
class Graph {
 public:
  Graph() = default;

  // Path: edges (n, n+1) for n < N, N >= 2. Cycle: the path plus (N, 1),
  // N >= 3.
  static absl::StatusOr<Graph> Build(GraphKind kind, int server_count);
  // Arbitrary edge list tagged kGeneric. Not validated; see ValidateGraph.
  static Graph FromEdges(int server_count, std::vector<Edge> edges);

  GraphKind kind() const { return kind_; }
  int server_count() const { return server_count_; }
  int message_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Precondition: 1 <= k <= message_count().
  std::pair<ServerId, ServerId> ServersOf(MessageId k) const;
  // Messages stored at server n, ascending.
  std::vector<MessageId> StorageOf(ServerId n) const;
  bool Stores(ServerId n, MessageId k) const;

  // {kind, N, edges}
  nlohmann::json ToJson() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(GraphKind kind, int server_count, std::vector<Edge> edges)
      : kind_(kind), server_count_(server_count), edges_(std::move(edges)) {}

  GraphKind kind_ = GraphKind::kGeneric;
  int server_count_ = 0;
  std::vector<Edge> edges_;
};

struct GraphViolation {
  enum class Kind {
    kTooFewServers,
    kNoMessages,
    kServerOutOfRange,
    kSelfLoop,
    kDuplicateEdge,
    kDisconnected,
  };
  Kind kind;
  std::string detail;
};

// Checks simplicity, connectivity and two-replication. Returns the first
// violation found, or nullopt for a valid graph.
std::optional<GraphViolation> ValidateGraph(const Graph& graph);

}  // namespace spir

#endif  // SPIR_GRAPH_H_
