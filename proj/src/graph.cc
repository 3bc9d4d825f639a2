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

#include "expander/graph.h"

#include <algorithm>
#include <queue>
#include <string>

#include "expander/errors.h"

namespace expander {

Graph::Graph(int node_count) {
  if (node_count < 0) {
    throw ParameterError("node count must be nonnegative");
  }
  adjacency_.resize(static_cast<std::size_t>(node_count));
}

Graph::Graph(int node_count, std::span<const Edge> edges) : Graph(node_count) {
  for (const Edge& e : edges) {
    add_edge(e.first, e.second);
  }
}

void Graph::check_node(Node u) const {
  if (u < 0 || u >= node_count()) {
    throw IndexError("node " + std::to_string(u) + " out of range [0, " +
                     std::to_string(node_count()) + ")");
  }
}

std::span<const Node> Graph::neighbors(Node u) const {
  check_node(u);
  return adjacency_[static_cast<std::size_t>(u)];
}

bool Graph::has_edge(Node u, Node v) const {
  check_node(u);
  check_node(v);
  const auto& nu = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

void Graph::add_edge(Node u, Node v) {
  check_node(u);
  check_node(v);
  if (u == v) {
    throw ParameterError("self-loop at node " + std::to_string(u));
  }
  auto& nu = adjacency_[static_cast<std::size_t>(u)];
  auto& nv = adjacency_[static_cast<std::size_t>(v)];
  auto pos_u = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos_u != nu.end() && *pos_u == v) {
    throw ParameterError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  nu.insert(pos_u, v);
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(Node u, Node v) {
  check_node(u);
  check_node(v);
  auto& nu = adjacency_[static_cast<std::size_t>(u)];
  auto& nv = adjacency_[static_cast<std::size_t>(v)];
  auto pos_u = std::lower_bound(nu.begin(), nu.end(), v);
  if (pos_u == nu.end() || *pos_u != v) {
    throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") not present");
  }
  nu.erase(pos_u);
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Node u = 0; u < node_count(); ++u) {
    for (Node v : adjacency_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out;
  out.reserve(adjacency_.size());
  for (const auto& nbrs : adjacency_) out.push_back(static_cast<int>(nbrs.size()));
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (adjacency_.empty()) return std::nullopt;
  const auto d = adjacency_.front().size();
  for (const auto& nbrs : adjacency_) {
    if (nbrs.size() != d) return std::nullopt;
  }
  return static_cast<int>(d);
}

std::vector<int> bfs_distances(const Graph& g, Node source) {
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), kUnreachable);
  g.neighbors(source);  // range check
  std::queue<Node> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Node u = frontier.front();
    frontier.pop();
    const int next = dist[static_cast<std::size_t>(u)] + 1;
    for (Node v : g.neighbors(u)) {
      auto& dv = dist[static_cast<std::size_t>(v)];
      if (dv == kUnreachable) {
        dv = next;
        frontier.push(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.node_count() <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.node_count()), -1);
  int next_label = 0;
  std::vector<Node> stack;
  for (Node s = 0; s < g.node_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next_label;
    stack.push_back(s);
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      for (Node v : g.neighbors(u)) {
        if (label[static_cast<std::size_t>(v)] < 0) {
          label[static_cast<std::size_t>(v)] = next_label;
          stack.push_back(v);
        }
      }
    }
    ++next_label;
  }
  return label;
}

int distance(const Graph& g, Node u, Node v) {
  g.neighbors(v);  // range check
  if (u == v) {
    g.neighbors(u);
    return 0;
  }
  return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

int common_neighbors(const Graph& g, Node u, Node v) {
  if (u == v) {
    throw DomainError("common_neighbors requires distinct nodes");
  }
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  int count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace expander
