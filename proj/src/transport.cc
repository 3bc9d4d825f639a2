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

#include "expander/transport.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "expander/errors.h"

namespace expander {

namespace {

constexpr double kMassEpsilon = 1e-15;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Arc {
  int to;
  int reverse;  // index of the paired arc in adjacency[to]
  double capacity;
  double cost;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adjacency_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int from, int to, double capacity, double cost) {
    auto& out = adjacency_[static_cast<std::size_t>(from)];
    auto& in = adjacency_[static_cast<std::size_t>(to)];
    out.push_back({to, static_cast<int>(in.size()), capacity, cost});
    in.push_back({from, static_cast<int>(out.size()) - 1, 0.0, -cost});
  }

  // Pushes up to `amount` from source to sink along cheapest residual paths.
  // Returns the total cost; `amount` is reduced by what was routed.
  double route(int source, int sink, double& amount) {
    const int n = static_cast<int>(adjacency_.size());
    double total_cost = 0.0;
    std::vector<double> dist(static_cast<std::size_t>(n));
    std::vector<int> prev_node(static_cast<std::size_t>(n));
    std::vector<int> prev_arc(static_cast<std::size_t>(n));
    // Each augmentation saturates an arc; this cap is far above what
    // neighbourhood-sized problems need and only guards against cycling.
    const int max_augmentations = 64 * n * n + 1024;
    for (int iteration = 0; amount > kMassEpsilon; ++iteration) {
      if (iteration > max_augmentations) {
        throw DomainError("transport solver failed to converge");
      }
      std::fill(dist.begin(), dist.end(), kInfinity);
      dist[static_cast<std::size_t>(source)] = 0.0;
      for (int pass = 0; pass < n; ++pass) {
        bool changed = false;
        for (int u = 0; u < n; ++u) {
          const double du = dist[static_cast<std::size_t>(u)];
          if (du == kInfinity) continue;
          const auto& arcs = adjacency_[static_cast<std::size_t>(u)];
          for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
            const Arc& a = arcs[static_cast<std::size_t>(k)];
            if (a.capacity <= kMassEpsilon) continue;
            // Strict improvement beyond rounding keeps zero-cost cycles inert.
            if (du + a.cost < dist[static_cast<std::size_t>(a.to)] - 1e-12) {
              dist[static_cast<std::size_t>(a.to)] = du + a.cost;
              prev_node[static_cast<std::size_t>(a.to)] = u;
              prev_arc[static_cast<std::size_t>(a.to)] = k;
              changed = true;
            }
          }
        }
        if (!changed) break;
      }
      if (dist[static_cast<std::size_t>(sink)] == kInfinity) break;

      double push = amount;
      for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
        const Arc& a = adjacency_[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                                 [static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
        push = std::min(push, a.capacity);
      }
      for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
        Arc& a = adjacency_[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                           [static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
        a.capacity -= push;
        adjacency_[static_cast<std::size_t>(v)][static_cast<std::size_t>(a.reverse)].capacity += push;
      }
      total_cost += push * dist[static_cast<std::size_t>(sink)];
      amount -= push;
    }
    return total_cost;
  }

 private:
  std::vector<std::vector<Arc>> adjacency_;
};

}  // namespace

double min_cost_transport(std::span<const double> supply, std::span<const double> demand,
                          std::span<const double> cost) {
  const int rows = static_cast<int>(supply.size());
  const int cols = static_cast<int>(demand.size());
  if (cost.size() != supply.size() * demand.size()) {
    throw ParameterError("transport cost matrix has the wrong size");
  }
  const double supply_total = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double demand_total = std::accumulate(demand.begin(), demand.end(), 0.0);
  if (std::abs(supply_total - demand_total) > 1e-9) {
    throw ParameterError("transport supply and demand totals differ");
  }
  for (double c : cost) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw ParameterError("transport costs must be finite and nonnegative");
  }

  // Nodes: 0 = source, 1..rows = supply side, rows+1..rows+cols = demand
  // side, rows+cols+1 = sink.
  const int source = 0;
  const int sink = rows + cols + 1;
  FlowNetwork net(rows + cols + 2);
  for (int i = 0; i < rows; ++i) {
    if (supply[static_cast<std::size_t>(i)] < 0) throw ParameterError("negative supply");
    net.add_arc(source, 1 + i, supply[static_cast<std::size_t>(i)], 0.0);
  }
  for (int j = 0; j < cols; ++j) {
    if (demand[static_cast<std::size_t>(j)] < 0) throw ParameterError("negative demand");
    net.add_arc(1 + rows + j, sink, demand[static_cast<std::size_t>(j)], 0.0);
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      net.add_arc(1 + i, 1 + rows + j, kInfinity,
                  cost[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]);
    }
  }
  double remaining = std::min(supply_total, demand_total);
  return net.route(source, sink, remaining);
}

}  // namespace expander
