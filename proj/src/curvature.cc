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

#include "expander/curvature.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "expander/errors.h"
#include "expander/transport.h"

namespace expander {

NodeDistribution::NodeDistribution(std::vector<std::pair<Node, double>> support)
    : support_(std::move(support)) {
  if (support_.empty()) throw DomainError("distribution has empty support");
  std::sort(support_.begin(), support_.end());
  double total = 0.0;
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (!(support_[k].second > 0.0)) throw DomainError("distribution masses must be positive");
    if (k > 0 && support_[k].first == support_[k - 1].first) {
      throw DomainError("distribution support has repeated node " + std::to_string(support_[k].first));
    }
    total += support_[k].second;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("distribution masses do not sum to 1");
}

NodeDistribution NodeDistribution::point_mass(Node x) { return NodeDistribution({{x, 1.0}}); }

NodeDistribution NodeDistribution::random_walk(const Graph& g, Node x) {
  const auto nbrs = g.neighbors(x);
  if (nbrs.empty()) throw DomainError("random walk from isolated node " + std::to_string(x));
  const double mass = 1.0 / static_cast<double>(nbrs.size());
  std::vector<std::pair<Node, double>> support;
  support.reserve(nbrs.size());
  for (Node y : nbrs) support.emplace_back(y, mass);
  return NodeDistribution(std::move(support));
}

int DistanceCache::operator()(Node u, Node v) {
  auto it = rows_.find(u);
  if (it == rows_.end()) it = rows_.emplace(u, bfs_distances(*graph_, u)).first;
  graph_->neighbors(v);  // range check
  return it->second[static_cast<std::size_t>(v)];
}

double wasserstein1(DistanceCache& distances, const NodeDistribution& mu, const NodeDistribution& nu) {
  const auto& a = mu.support();
  const auto& b = nu.support();
  std::vector<double> supply;
  std::vector<double> demand;
  supply.reserve(a.size());
  demand.reserve(b.size());
  for (const auto& [x, p] : a) supply.push_back(p);
  for (const auto& [y, q] : b) demand.push_back(q);
  std::vector<double> cost;
  cost.reserve(a.size() * b.size());
  for (const auto& [x, p] : a) {
    for (const auto& [y, q] : b) {
      const int d = distances(x, y);
      if (d == kUnreachable) {
        throw DomainError("W1 supports lie in different components (nodes " + std::to_string(x) +
                          ", " + std::to_string(y) + ")");
      }
      cost.push_back(d);
    }
  }
  return min_cost_transport(supply, demand, cost);
}

double wasserstein1(const Graph& g, const NodeDistribution& mu, const NodeDistribution& nu) {
  DistanceCache distances(g);
  return wasserstein1(distances, mu, nu);
}

double ollivier_ricci_edge(DistanceCache& distances, Node u, Node v) {
  const Graph& g = distances.graph();
  if (u == v || !g.has_edge(u, v)) {
    throw DomainError("Ollivier-Ricci curvature requested for non-edge (" + std::to_string(u) + ", " +
                      std::to_string(v) + ")");
  }
  return 1.0 - wasserstein1(distances, NodeDistribution::random_walk(g, u),
                            NodeDistribution::random_walk(g, v));
}

double ollivier_ricci_edge(const Graph& g, Node u, Node v) {
  DistanceCache distances(g);
  return ollivier_ricci_edge(distances, u, v);
}

std::vector<double> edge_curvatures(const Graph& g) {
  DistanceCache distances(g);
  std::vector<double> out;
  for (const Edge& e : g.edges()) out.push_back(ollivier_ricci_edge(distances, e.first, e.second));
  return out;
}

KantorovichResult kantorovich_norm(const Graph& g) {
  const int n = g.node_count();
  if (n > kKantorovichMaxNodes) {
    throw CapacityError("kantorovich_norm solves O(n^2) transport problems and is limited to n <= " +
                        std::to_string(kKantorovichMaxNodes));
  }
  if (n < 2 || !is_connected(g)) {
    throw DomainError("kantorovich_norm needs a connected graph with at least 2 nodes");
  }
  DistanceCache distances(g);
  std::vector<NodeDistribution> walks;
  walks.reserve(static_cast<std::size_t>(n));
  for (Node x = 0; x < n; ++x) walks.push_back(NodeDistribution::random_walk(g, x));

  KantorovichResult result;
  result.norm = -1.0;
  for (Node x = 0; x < n; ++x) {
    for (Node y = x + 1; y < n; ++y) {
      const double ratio = wasserstein1(distances, walks[static_cast<std::size_t>(x)],
                                        walks[static_cast<std::size_t>(y)]) /
                           distances(x, y);
      if (ratio > result.norm) {
        result.norm = ratio;
        result.maximizer = {x, y};
      }
    }
  }
  result.curvature = 1.0 - result.norm;
  return result;
}

CurvatureReport curvature_report(const Graph& g) {
  CurvatureReport report;
  DistanceCache distances(g);
  for (const Edge& e : g.edges()) {
    report.per_edge.emplace_back(e, ollivier_ricci_edge(distances, e.first, e.second));
  }
  if (g.node_count() >= 2 && g.node_count() <= kKantorovichMaxNodes && is_connected(g)) {
    const auto k = kantorovich_norm(g);
    report.kantorovich_norm = k.norm;
    report.graph_curvature = k.curvature;
  }
  return report;
}

}  // namespace expander
