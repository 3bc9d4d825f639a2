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

#ifndef EXPANDER_REWIRING_H_
#define EXPANDER_REWIRING_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expander/graph.h"
#include "expander/rng.h"

namespace expander {

enum class Algorithm { kRlef, kGrlef, kSdrf };

std::string_view algorithm_name(Algorithm a);
// ParameterError for unknown ids.
Algorithm parse_algorithm(std::string_view name);

enum class AbortReason {
  kNeighborOverlap,   // RLEF: sampled i is v or already adjacent to v
  kNoValidJ,          // RLEF: N(v) \ (N(u) + u) is empty
  kSubsetCondition,   // G-RLEF: one endpoint's private neighbourhood is empty
  kNoSupportingEdge,  // SDRF: no non-adjacent (i, j) around the weakest edge
};

std::string_view abort_reason_name(AbortReason r);

struct StepOutcome {
  bool applied = false;
  std::optional<AbortReason> abort_reason;
  std::vector<Edge> removed_edges;
  std::vector<Edge> added_edges;
  Edge hub_edge;
};

// One Random Local Edge Flip on `g`, in place.
// Draw order: uniform_index(2m) picks an oriented hub edge (u, v) by walking
// the adjacency lists in node order; uniform_index(deg u) picks i; when the
// flip is not aborted, uniform_index(|J|) picks j from the sorted set
// J = N(v) \ (N(u) + u).
StepOutcome rlef_step(Graph& g, RngStream& rng);

// The part of rlef_step after hub edge (u, v) and i are fixed.
StepOutcome rlef_flip(Graph& g, Node u, Node v, Node i, RngStream& rng);

// Hub-edge sampling probabilities of G-RLEF, aligned with g.edges():
// softmax(tau * x) with x_e = 2 / (2 + #common neighbours of e).
std::vector<double> grlef_hub_probabilities(const Graph& g, double tau);

// One Greedy Random Local Edge Flip on `g`, in place. tau must be > 0.
// Draw order: one uniform_real() selects the hub edge from the softmax;
// then uniform_index(#ties) picks i among minimizers, then likewise j.
StepOutcome grlef_step(Graph& g, double tau, RngStream& rng);

// One SDRF-style cycle on `g`, in place, using Ollivier-Ricci curvature:
// support the most negatively curved edge with the non-adjacent pair (i, j)
// around it that raises its curvature most, then delete the most positively
// curved edge anywhere. Ties are broken by uniform_index over the tied set
// (weakest edge, best candidate, strongest edge, in that order).
StepOutcome sdrf_step(Graph& g, RngStream& rng);

struct TraceRecord {
  std::int64_t iteration = 0;
  std::int64_t edge_count = 0;
  bool connected = false;
  double normalized_gap = 0.0;  // 0 when disconnected
  std::int64_t triangles = 0;
  bool aborted = false;         // whether the step producing this snapshot aborted
};

struct RewireTrace {
  Algorithm algorithm = Algorithm::kRlef;
  std::uint64_t seed = 0;
  std::optional<double> tau;
  std::int64_t iterations = 0;
  std::int64_t metric_every = 1;
  std::string normalization;
  std::vector<TraceRecord> records;
};

struct RunResult {
  Graph graph;
  RewireTrace trace;
};

inline constexpr double kDefaultTau = 5.0;

// Applies `iterations` steps of `algorithm` with one RngStream seeded by
// `seed`. Records the snapshot at iteration 0, at every multiple of
// metric_every, and at the final iteration. G-RLEF uses kDefaultTau when tau
// is not given. RLEF and G-RLEF need a connected input (DomainError).
RunResult run(Graph g, Algorithm algorithm, std::int64_t iterations, std::optional<double> tau,
              std::uint64_t seed, std::int64_t metric_every);

TraceRecord measure(const Graph& g, std::int64_t iteration, bool aborted);

}  // namespace expander

#endif  // EXPANDER_REWIRING_H_
