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

#include "expander/rewiring.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "expander/curvature.h"
#include "expander/errors.h"
#include "expander/spectral.h"
#include "expander/transport.h"

namespace expander {

namespace {

constexpr double kTieTolerance = 1e-12;

// Sorted set difference a \ (b + extra).
std::vector<Node> private_neighbors(std::span<const Node> a, std::span<const Node> b, Node extra) {
  std::vector<Node> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  std::erase(out, extra);
  return out;
}

void apply_flip(Graph& g, Node u, Node v, Node i, Node j, StepOutcome& outcome) {
  g.remove_edge(i, u);
  g.remove_edge(j, v);
  g.add_edge(i, v);
  g.add_edge(j, u);
  outcome.applied = true;
  outcome.removed_edges = {Edge(i, u), Edge(j, v)};
  outcome.added_edges = {Edge(i, v), Edge(j, u)};
}

StepOutcome aborted(Edge hub, AbortReason reason) {
  StepOutcome out;
  out.hub_edge = hub;
  out.abort_reason = reason;
  return out;
}

// Among `candidates`, the ones whose score is minimal (within tolerance).
template <typename Score>
std::vector<Node> minimizers(const std::vector<Node>& candidates, Score score) {
  std::vector<Node> best;
  int best_score = 0;
  for (Node c : candidates) {
    const int s = score(c);
    if (best.empty() || s < best_score) {
      best = {c};
      best_score = s;
    } else if (s == best_score) {
      best.push_back(c);
    }
  }
  return best;
}

// Indices of entries within kTieTolerance of the extreme value.
std::vector<std::size_t> extreme_indices(const std::vector<double>& values, bool want_max) {
  std::vector<std::size_t> out;
  if (values.empty()) return out;
  const double extreme = want_max ? *std::max_element(values.begin(), values.end())
                                  : *std::min_element(values.begin(), values.end());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::abs(values[k] - extreme) <= kTieTolerance) out.push_back(k);
  }
  return out;
}

template <typename T>
const T& pick(const std::vector<T>& items, RngStream& rng) {
  return items[rng.uniform_index(items.size())];
}

// Curvature of edge (u, v) in g + (i, j), reusing BFS rows of g: the new
// edge can only shorten a path by routing through it once.
double curvature_with_extra_edge(const Graph& g, DistanceCache& distances, Node u, Node v, Node i, Node j) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  auto hop = [&](Node x, Node y) {
    const long long direct = distances(x, y);
    const long long via_ij = static_cast<long long>(distances(i, x)) + 1 + distances(j, y);
    const long long via_ji = static_cast<long long>(distances(j, x)) + 1 + distances(i, y);
    return static_cast<double>(std::min({direct, via_ij, via_ji}));
  };
  std::vector<double> supply(a.size(), 1.0 / static_cast<double>(a.size()));
  std::vector<double> demand(b.size(), 1.0 / static_cast<double>(b.size()));
  std::vector<double> cost;
  cost.reserve(a.size() * b.size());
  for (Node x : a) {
    for (Node y : b) cost.push_back(hop(x, y));
  }
  return 1.0 - min_cost_transport(supply, demand, cost);
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kRlef: return "rlef";
    case Algorithm::kGrlef: return "grlef";
    case Algorithm::kSdrf: return "sdrf";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kRlef, Algorithm::kGrlef, Algorithm::kSdrf}) {
    if (algorithm_name(a) == name) return a;
  }
  throw ParameterError("unknown rewiring algorithm '" + std::string(name) + "' (expected rlef, grlef or sdrf)");
}

std::string_view abort_reason_name(AbortReason r) {
  switch (r) {
    case AbortReason::kNeighborOverlap: return "neighbor_overlap";
    case AbortReason::kNoValidJ: return "no_valid_j";
    case AbortReason::kSubsetCondition: return "subset_condition";
    case AbortReason::kNoSupportingEdge: return "no_supporting_edge";
  }
  return "unknown";
}

StepOutcome rlef_flip(Graph& g, Node u, Node v, Node i, RngStream& rng) {
  const Edge hub(u, v);
  if (i == v || g.has_edge(i, v)) return aborted(hub, AbortReason::kNeighborOverlap);
  // Sampling j uniformly from N(v) until it lands outside N(u) + u draws
  // uniformly from this set; enumerating it first guarantees termination.
  const auto valid_j = private_neighbors(g.neighbors(v), g.neighbors(u), u);
  if (valid_j.empty()) return aborted(hub, AbortReason::kNoValidJ);
  const Node j = pick(valid_j, rng);
  StepOutcome outcome;
  outcome.hub_edge = hub;
  apply_flip(g, u, v, i, j, outcome);
  return outcome;
}

StepOutcome rlef_step(Graph& g, RngStream& rng) {
  if (g.edge_count() < 1) throw DomainError("rlef_step needs at least one edge");
  std::uint64_t slot = rng.uniform_index(static_cast<std::uint64_t>(2 * g.edge_count()));
  Node u = 0;
  while (slot >= static_cast<std::uint64_t>(g.degree(u))) {
    slot -= static_cast<std::uint64_t>(g.degree(u));
    ++u;
  }
  const Node v = g.neighbors(u)[slot];
  const auto nu = g.neighbors(u);
  const Node i = nu[rng.uniform_index(nu.size())];
  return rlef_flip(g, u, v, i, rng);
}

std::vector<double> grlef_hub_probabilities(const Graph& g, double tau) {
  if (!(tau > 0.0)) throw ParameterError("G-RLEF temperature tau must be positive");
  const auto edges = g.edges();
  std::vector<double> weight;
  weight.reserve(edges.size());
  for (const Edge& e : edges) weight.push_back(tau * triangle_resistance_bound(g, e.first, e.second));
  const double top = weight.empty() ? 0.0 : *std::max_element(weight.begin(), weight.end());
  double total = 0.0;
  for (double& w : weight) {
    w = std::exp(w - top);
    total += w;
  }
  for (double& w : weight) w /= total;
  return weight;
}

StepOutcome grlef_step(Graph& g, double tau, RngStream& rng) {
  if (!(tau > 0.0)) throw ParameterError("G-RLEF temperature tau must be positive");
  if (g.edge_count() < 1) throw DomainError("grlef_step needs at least one edge");
  const auto edges = g.edges();
  const auto prob = grlef_hub_probabilities(g, tau);
  const double r = rng.uniform_real();
  std::size_t chosen = edges.size() - 1;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    cumulative += prob[k];
    if (r < cumulative) {
      chosen = k;
      break;
    }
  }
  const Node u = edges[chosen].first;
  const Node v = edges[chosen].second;
  const Edge hub(u, v);

  // N(u) \ N(v) literally contains v; a flip with i = v would be a self-loop.
  const auto i_candidates = private_neighbors(g.neighbors(u), g.neighbors(v), v);
  const auto j_candidates = private_neighbors(g.neighbors(v), g.neighbors(u), u);
  if (i_candidates.empty() || j_candidates.empty()) return aborted(hub, AbortReason::kSubsetCondition);

  const auto best_i = minimizers(i_candidates, [&](Node i) {
    return common_neighbors(g, i, v) - common_neighbors(g, i, u);
  });
  const Node i = pick(best_i, rng);
  const auto best_j = minimizers(j_candidates, [&](Node j) {
    return common_neighbors(g, j, u) - common_neighbors(g, j, v);
  });
  const Node j = pick(best_j, rng);

  StepOutcome outcome;
  outcome.hub_edge = hub;
  apply_flip(g, u, v, i, j, outcome);
  return outcome;
}

StepOutcome sdrf_step(Graph& g, RngStream& rng) {
  if (g.edge_count() < 1) throw DomainError("sdrf_step needs at least one edge");
  const auto edges = g.edges();
  DistanceCache distances(g);
  std::vector<double> curvature;
  curvature.reserve(edges.size());
  for (const Edge& e : edges) curvature.push_back(ollivier_ricci_edge(distances, e.first, e.second));

  const Edge weakest = edges[pick(extreme_indices(curvature, false), rng)];
  const Node u = weakest.first;
  const Node v = weakest.second;

  std::vector<Edge> candidates;
  for (Node i : g.neighbors(u)) {
    if (i == v) continue;
    for (Node j : g.neighbors(v)) {
      if (j == u || j == i || g.has_edge(i, j)) continue;
      candidates.emplace_back(i, j);
    }
  }
  if (candidates.empty()) return aborted(weakest, AbortReason::kNoSupportingEdge);

  std::vector<double> gain;
  gain.reserve(candidates.size());
  for (const Edge& c : candidates) {
    gain.push_back(curvature_with_extra_edge(g, distances, u, v, c.first, c.second));
  }
  const Edge support = candidates[pick(extreme_indices(gain, true), rng)];
  g.add_edge(support.first, support.second);

  const auto new_edges = g.edges();
  const auto new_curvature = edge_curvatures(g);
  const Edge strongest = new_edges[pick(extreme_indices(new_curvature, true), rng)];
  g.remove_edge(strongest.first, strongest.second);

  StepOutcome outcome;
  outcome.applied = true;
  outcome.hub_edge = weakest;
  outcome.added_edges = {support};
  outcome.removed_edges = {strongest};
  return outcome;
}

TraceRecord measure(const Graph& g, std::int64_t iteration, bool aborted_step) {
  TraceRecord record;
  record.iteration = iteration;
  record.edge_count = g.edge_count();
  record.connected = is_connected(g);
  record.normalized_gap = record.connected && g.node_count() >= 2 ? normalized_spectral_gap(g) : 0.0;
  record.triangles = triangle_count(g);
  record.aborted = aborted_step;
  return record;
}

RunResult run(Graph g, Algorithm algorithm, std::int64_t iterations, std::optional<double> tau,
              std::uint64_t seed, std::int64_t metric_every) {
  if (iterations < 0) throw ParameterError("iterations must be nonnegative");
  if (metric_every < 1) throw ParameterError("metric_every must be positive");
  if (algorithm == Algorithm::kGrlef) {
    if (!tau) tau = kDefaultTau;
    if (!(*tau > 0.0)) throw ParameterError("G-RLEF temperature tau must be positive");
  }
  if (algorithm != Algorithm::kSdrf && !is_connected(g)) {
    throw DomainError(std::string(algorithm_name(algorithm)) + " requires a connected input graph");
  }

  RunResult result;
  RewireTrace& trace = result.trace;
  trace.algorithm = algorithm;
  trace.seed = seed;
  trace.tau = algorithm == Algorithm::kGrlef ? tau : std::nullopt;
  trace.iterations = iterations;
  trace.metric_every = metric_every;
  trace.normalization = kNormalizedGapConvention;
  trace.records.push_back(measure(g, 0, false));

  RngStream rng(seed);
  for (std::int64_t it = 1; it <= iterations; ++it) {
    StepOutcome outcome;
    switch (algorithm) {
      case Algorithm::kRlef: outcome = rlef_step(g, rng); break;
      case Algorithm::kGrlef: outcome = grlef_step(g, *tau, rng); break;
      case Algorithm::kSdrf: outcome = sdrf_step(g, rng); break;
    }
    if (it % metric_every == 0 || it == iterations) {
      trace.records.push_back(measure(g, it, !outcome.applied));
    }
  }
  result.graph = std::move(g);
  return result;
}

}  // namespace expander
