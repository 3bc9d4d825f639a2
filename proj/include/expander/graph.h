// Copyright 2026 The Expander Rewire Authors
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

#ifndef EXPANDER_GRAPH_H_
#define EXPANDER_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace expander {

using Node = int;

// Undirected edge, always stored with first < second.
struct Edge {
  Node first = 0;
  Node second = 0;

  Edge() = default;
  Edge(Node a, Node b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Marker returned by distance() for unreachable pairs.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Simple undirected graph on nodes 0..n-1. Each adjacency list is kept
// sorted and duplicate-free, and the relation is symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count);
  Graph(int node_count, std::span<const Edge> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  std::span<const Node> neighbors(Node u) const;
  int degree(Node u) const { return static_cast<int>(neighbors(u).size()); }
  bool has_edge(Node u, Node v) const;

  // Throws ParameterError on self-loops or an already present edge.
  void add_edge(Node u, Node v);
  // Throws DomainError if the edge is absent.
  void remove_edge(Node u, Node v);

  // All edges with first < second, in ascending lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  // Degree d when every node has degree d; nullopt otherwise (and for n = 0).
  std::optional<int> regular_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_node(Node u) const;

  std::vector<std::vector<Node>> adjacency_;
  std::int64_t edge_count_ = 0;
};

// BFS from node 0 reaches every node. Graphs with n <= 1 are connected.
bool is_connected(const Graph& g);

// Component label per node, labels numbered 0.. in order of first node.
std::vector<int> component_labels(const Graph& g);

// Hop distance; kUnreachable when u and v lie in different components.
int distance(const Graph& g, Node u, Node v);

// Hop distances from `source` to every node (kUnreachable where unreachable).
std::vector<int> bfs_distances(const Graph& g, Node source);

// |N(u) ∩ N(v)|. Requires u != v.
int common_neighbors(const Graph& g, Node u, Node v);

}  // namespace expander

#endif  // EXPANDER_GRAPH_H_
