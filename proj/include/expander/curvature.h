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

#ifndef EXPANDER_CURVATURE_H_
#define EXPANDER_CURVATURE_H_

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "expander/graph.h"

namespace expander {

// Finitely supported probability distribution over graph nodes.
class NodeDistribution {
 public:
  // Validates: distinct nodes, positive masses summing to 1 within 1e-12.
  // Node ranges are checked against a graph when the distribution is used.
  explicit NodeDistribution(std::vector<std::pair<Node, double>> support);

  static NodeDistribution point_mass(Node x);
  // K_G(x, .) for the simple (non-lazy) random walk: uniform over N(x).
  // DomainError for isolated nodes.
  static NodeDistribution random_walk(const Graph& g, Node x);

  const std::vector<std::pair<Node, double>>& support() const { return support_; }

 private:
  std::vector<std::pair<Node, double>> support_;
};

// BFS rows computed on demand and kept for the lifetime of the cache. The
// cache refers to `g`, which must outlive it and stay unmodified.
class DistanceCache {
 public:
  explicit DistanceCache(const Graph& g) : graph_(&g) {}
  int operator()(Node u, Node v);
  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
  std::unordered_map<Node, std::vector<int>> rows_;
};

// Exact 1-Wasserstein distance with the hop metric as ground cost.
// DomainError when some pair of support nodes is disconnected.
double wasserstein1(const Graph& g, const NodeDistribution& mu, const NodeDistribution& nu);
double wasserstein1(DistanceCache& distances, const NodeDistribution& mu, const NodeDistribution& nu);

// 1 - W1(K_G(u,.), K_G(v,.)) for an edge (u, v); DomainError for non-edges.
double ollivier_ricci_edge(const Graph& g, Node u, Node v);
double ollivier_ricci_edge(DistanceCache& distances, Node u, Node v);

// Curvature of every edge, aligned with g.edges().
std::vector<double> edge_curvatures(const Graph& g);

inline constexpr int kKantorovichMaxNodes = 60;

struct KantorovichResult {
  double norm = 0.0;       // sup over x != x' of W1(K(x,.), K(x',.)) / d(x, x')
  double curvature = 0.0;  // 1 - norm
  std::pair<Node, Node> maximizer{0, 0};
};

// Requires a connected graph with 2 <= n <= kKantorovichMaxNodes.
KantorovichResult kantorovich_norm(const Graph& g);

struct CurvatureReport {
  std::vector<std::pair<Edge, double>> per_edge;
  // Present only when the graph is within the Kantorovich size bound.
  std::optional<double> kantorovich_norm;
  std::optional<double> graph_curvature;
};

CurvatureReport curvature_report(const Graph& g);

}  // namespace expander

#endif  // EXPANDER_CURVATURE_H_
