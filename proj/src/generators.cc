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

#include "expander/generators.h"

#include <algorithm>
#include <string>

#include "expander/errors.h"
#include "expander/rng.h"

namespace expander {

namespace {

void add_clique(Graph& g, Node first, int size) {
  for (Node a = first; a < first + size; ++a) {
    for (Node b = a + 1; b < first + size; ++b) g.add_edge(a, b);
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterError(message);
}

// One configuration-model attempt; false when the pairing is not simple.
bool try_pairing(int n, int degree, RngStream& rng, Graph& out) {
  std::vector<Node> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree));
  for (Node u = 0; u < n; ++u) stubs.insert(stubs.end(), static_cast<std::size_t>(degree), u);
  // Fisher-Yates from the back: one uniform_index per position.
  for (std::size_t i = stubs.size(); i > 1; --i) {
    std::swap(stubs[i - 1], stubs[rng.uniform_index(i)]);
  }
  out = Graph(n);
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    const Node a = stubs[i];
    const Node b = stubs[i + 1];
    if (a == b || out.has_edge(a, b)) return false;
    out.add_edge(a, b);
  }
  return true;
}

Graph complement(const Graph& g) {
  Graph out(g.node_count());
  for (Node a = 0; a < g.node_count(); ++a) {
    for (Node b = a + 1; b < g.node_count(); ++b) {
      if (!g.has_edge(a, b)) out.add_edge(a, b);
    }
  }
  return out;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kDumbbell: return "dumbbell";
    case Family::kRingOfCliques: return "ring_of_cliques";
    case Family::kPathOfCliques: return "path_of_cliques";
    case Family::kPath: return "path";
    case Family::kComplete: return "complete";
    case Family::kCycle: return "cycle";
    case Family::kRandomRegular: return "random_regular";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string key(name);
  std::replace(key.begin(), key.end(), '-', '_');
  for (Family f : {Family::kDumbbell, Family::kRingOfCliques, Family::kPathOfCliques, Family::kPath,
                   Family::kComplete, Family::kCycle, Family::kRandomRegular}) {
    if (family_name(f) == key) return f;
  }
  throw ParameterError("unknown graph family '" + std::string(name) + "'");
}

std::string GeneratorSpec::describe() const {
  std::string out(family_name(family));
  switch (family) {
    case Family::kDumbbell:
      return out + "(c=" + std::to_string(clique_size) + ")";
    case Family::kRingOfCliques:
      return out + "(d=" + std::to_string(degree) + ",m=" + std::to_string(num_cliques) + ")";
    case Family::kPathOfCliques:
      return out + "(c=" + std::to_string(clique_size) + ",m=" + std::to_string(num_cliques) + ")";
    case Family::kRandomRegular:
      return out + "(n=" + std::to_string(n) + ",d=" + std::to_string(degree) +
             ",seed=" + std::to_string(seed) + ")";
    default:
      return out + "(n=" + std::to_string(n) + ")";
  }
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  add_clique(g, 0, n);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "path graph needs n >= 1");
  Graph g(n);
  for (Node u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle graph needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph dumbbell_graph(int clique_size) {
  require(clique_size >= 2, "dumbbell needs clique size >= 2");
  Graph g(2 * clique_size);
  add_clique(g, 0, clique_size);
  add_clique(g, clique_size, clique_size);
  g.add_edge(clique_size - 1, clique_size);
  return g;
}

Graph ring_of_cliques(int degree, int num_cliques) {
  require(degree >= 3, "ring_of_cliques needs degree >= 3");
  require(num_cliques >= 2, "ring_of_cliques needs at least 2 cliques");
  const int size = degree + 1;
  Graph g(size * num_cliques);
  for (int k = 0; k < num_cliques; ++k) {
    const Node first = k * size;
    add_clique(g, first, size);
    g.remove_edge(first, first + degree);
  }
  for (int k = 0; k < num_cliques; ++k) {
    const Node last = k * size + degree;
    const Node next_first = ((k + 1) % num_cliques) * size;
    g.add_edge(last, next_first);
  }
  return g;
}

Graph path_of_cliques(int clique_size, int num_cliques) {
  require(clique_size >= 1, "path_of_cliques needs clique size >= 1");
  require(num_cliques >= 1, "path_of_cliques needs at least 1 clique");
  Graph g(clique_size * num_cliques);
  for (int k = 0; k < num_cliques; ++k) {
    add_clique(g, k * clique_size, clique_size);
    if (k + 1 < num_cliques) g.add_edge((k + 1) * clique_size - 1, (k + 1) * clique_size);
  }
  return g;
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed) {
  require(n >= 1 && degree >= 0, "random_regular needs n >= 1 and d >= 0");
  require(degree < n, "random_regular needs d < n");
  require((static_cast<long long>(n) * degree) % 2 == 0, "random_regular needs n*d even");
  RngStream rng(seed);
  Graph g;
  // Dense pairings are almost never simple. Pair the sparse complement
  // instead; with 2d >= n any two non-adjacent nodes share a neighbour, so
  // the complement of any simple pairing is connected.
  const bool dense = 2 * degree > n - 1;
  const int paired = dense ? n - 1 - degree : degree;
  for (int attempt = 0; attempt < kRandomRegularAttempts; ++attempt) {
    if (!try_pairing(n, paired, rng, g)) continue;
    if (dense) return complement(g);
    if (is_connected(g)) return g;
  }
  throw GenerationError("random_regular(n=" + std::to_string(n) + ", d=" + std::to_string(degree) +
                        ") found no simple connected pairing in " +
                        std::to_string(kRandomRegularAttempts) + " attempts");
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kDumbbell: return dumbbell_graph(spec.clique_size);
    case Family::kRingOfCliques: return ring_of_cliques(spec.degree, spec.num_cliques);
    case Family::kPathOfCliques: return path_of_cliques(spec.clique_size, spec.num_cliques);
    case Family::kPath: return path_graph(spec.n);
    case Family::kComplete: return complete_graph(spec.n);
    case Family::kCycle: return cycle_graph(spec.n);
    case Family::kRandomRegular: return random_regular_graph(spec.n, spec.degree, spec.seed);
  }
  throw ParameterError("unknown generator family");
}

}  // namespace expander
