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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "expander/curvature.h"
#include "expander/errors.h"
#include "expander/generators.h"
#include "expander/transport.h"
#include "oracles.h"

namespace expander {
namespace {

std::vector<double> dense(const Graph& g, const NodeDistribution& d) {
  std::vector<double> out(static_cast<std::size_t>(g.node_count()), 0.0);
  for (const auto& [x, p] : d.support()) out[static_cast<std::size_t>(x)] = p;
  return out;
}

// Random distribution on a random subset of nodes with masses k/12.
NodeDistribution random_distribution(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> node(0, n - 1);
  std::vector<double> mass(static_cast<std::size_t>(n), 0.0);
  for (int unit = 0; unit < 12; ++unit) mass[static_cast<std::size_t>(node(rng))] += 1.0 / 12.0;
  std::vector<std::pair<Node, double>> support;
  double total = 0.0;
  for (int x = 0; x < n; ++x) {
    if (mass[static_cast<std::size_t>(x)] > 0) {
      support.emplace_back(x, mass[static_cast<std::size_t>(x)]);
      total += mass[static_cast<std::size_t>(x)];
    }
  }
  support.back().second += 1.0 - total;
  return NodeDistribution(std::move(support));
}

TEST(Transport, SolvesSmallProblemExactly) {
  // Optimal plan sends 0.5 along the two zero-cost cells and 0.2 across.
  const std::vector<double> supply{0.7, 0.3};
  const std::vector<double> demand{0.5, 0.5};
  const std::vector<double> cost{0, 3, 2, 0};
  EXPECT_NEAR(min_cost_transport(supply, demand, cost), 0.2 * 3, 1e-12);
  EXPECT_THROW(min_cost_transport(supply, std::vector<double>{0.5}, std::vector<double>{0, 0}), ParameterError);
}

TEST(Wasserstein, PointMassesOnPath) {
  const Graph path = path_graph(3);
  EXPECT_NEAR(wasserstein1(path, NodeDistribution::point_mass(0), NodeDistribution::point_mass(2)), 2.0, 1e-12);
  const auto mu = NodeDistribution::random_walk(path, 1);
  EXPECT_NEAR(wasserstein1(path, mu, mu), 0.0, 1e-12);
}

TEST(Wasserstein, CycleNeighbourhoods) {
  const Graph c5 = cycle_graph(5);
  const auto mu = NodeDistribution::random_walk(c5, 1);  // {0, 2}
  const auto nu = NodeDistribution::random_walk(c5, 2);  // {1, 3}
  // The 2x2 transport polytope with uniform marginals has two vertices.
  const double keep = 0.5 * (distance(c5, 0, 1) + distance(c5, 2, 3));
  const double swap = 0.5 * (distance(c5, 0, 3) + distance(c5, 2, 1));
  const double vertex_min = std::min(keep, swap);
  EXPECT_DOUBLE_EQ(vertex_min, 1.0);
  EXPECT_NEAR(wasserstein1(c5, mu, nu), vertex_min, 1e-12);
  EXPECT_NEAR(testing::dual_wasserstein1(c5, dense(c5, mu), dense(c5, nu)), 1.0, 1e-12);
}

TEST(Wasserstein, MatchesKantorovichRubinsteinDual) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = testing::random_connected_graph(n, trial % 5, rng);
    const auto mu = random_distribution(n, rng);
    const auto nu = random_distribution(n, rng);
    EXPECT_NEAR(wasserstein1(g, mu, nu), testing::dual_wasserstein1(g, dense(g, mu), dense(g, nu)), 1e-10)
        << "trial " << trial;
  }
}

TEST(Wasserstein, MetricAxiomsAndCouplingBound) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 12;
    const Graph g = testing::random_connected_graph(n, trial % 10, rng);
    const auto a = random_distribution(n, rng);
    const auto b = random_distribution(n, rng);
    const auto c = random_distribution(n, rng);
    const double ab = wasserstein1(g, a, b);
    EXPECT_NEAR(ab, wasserstein1(g, b, a), 1e-10);
    EXPECT_NEAR(wasserstein1(g, a, a), 0.0, 1e-12);
    EXPECT_LE(wasserstein1(g, a, c), ab + wasserstein1(g, b, c) + 1e-10);
    int max_distance = 0;
    for (const auto& [x, p] : a.support()) {
      for (const auto& [y, q] : b.support()) max_distance = std::max(max_distance, distance(g, x, y));
    }
    EXPECT_LE(ab, max_distance + 1e-12);
    if (ab < 1e-12) {
      EXPECT_EQ(a.support().size(), b.support().size());
    }
  }
}

TEST(Wasserstein, Errors) {
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  const Graph g(4, split);
  EXPECT_THROW(wasserstein1(g, NodeDistribution::point_mass(0), NodeDistribution::point_mass(3)), DomainError);
  EXPECT_THROW(NodeDistribution({{0, 0.5}, {1, 0.4}}), DomainError);
  EXPECT_THROW(NodeDistribution({{0, 0.5}, {0, 0.5}}), DomainError);
  EXPECT_THROW(NodeDistribution({{0, 1.5}, {1, -0.5}}), DomainError);
  EXPECT_THROW(NodeDistribution::random_walk(Graph(2), 0), DomainError);
}

TEST(OllivierRicci, NamedEdges) {
  EXPECT_NEAR(ollivier_ricci_edge(complete_graph(3), 0, 1), 0.5, 1e-12);
  EXPECT_NEAR(ollivier_ricci_edge(cycle_graph(5), 1, 2), 0.0, 1e-12);
  EXPECT_LT(ollivier_ricci_edge(dumbbell_graph(25), 24, 25), 0.0);
  EXPECT_THROW(ollivier_ricci_edge(path_graph(4), 0, 2), DomainError);
  EXPECT_THROW(ollivier_ricci_edge(path_graph(4), 1, 1), DomainError);
}

TEST(OllivierRicci, AtMostOne) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected_graph(5 + trial, trial * 2, rng);
    for (double k : edge_curvatures(g)) EXPECT_LE(k, 1.0 + 1e-12);
  }
}

TEST(Kantorovich, SmallCompleteGraphs) {
  const auto k2 = kantorovich_norm(complete_graph(2));
  EXPECT_NEAR(k2.norm, 1.0, 1e-12);
  EXPECT_NEAR(k2.curvature, 0.0, 1e-12);
  const auto k3 = kantorovich_norm(complete_graph(3));
  EXPECT_NEAR(k3.norm, 0.5, 1e-12);
  EXPECT_NEAR(k3.curvature, 0.5, 1e-12);
  // Coupling that keeps every shared neighbour fixed: kappa(K_n) = (n-2)/(n-1).
  for (int n = 3; n <= 8; ++n) {
    EXPECT_NEAR(kantorovich_norm(complete_graph(n)).curvature, (n - 2.0) / (n - 1.0), 1e-12) << n;
  }
  EXPECT_NEAR(kantorovich_norm(complete_graph(4)).curvature, 2.0 / 3.0, 1e-12);
}

TEST(Kantorovich, ReportConsistency) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = testing::random_connected_graph(4 + trial, trial * 2, rng);
    const CurvatureReport report = curvature_report(g);
    ASSERT_TRUE(report.kantorovich_norm);
    EXPECT_EQ(*report.graph_curvature, 1.0 - *report.kantorovich_norm);
    for (const auto& [edge, kappa] : report.per_edge) {
      EXPECT_LE(1.0 - kappa, *report.kantorovich_norm + 1e-12);
    }
  }
}

TEST(Kantorovich, Limits) {
  EXPECT_THROW(kantorovich_norm(cycle_graph(61)), CapacityError);
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  EXPECT_THROW(kantorovich_norm(Graph(4, split)), DomainError);
  EXPECT_FALSE(curvature_report(cycle_graph(61)).kantorovich_norm);
}

}  // namespace
}  // namespace expander
