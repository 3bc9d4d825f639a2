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

#ifndef EXPANDER_TRANSPORT_H_
#define EXPANDER_TRANSPORT_H_

#include <span>

namespace expander {

// Optimal value of the balanced transportation problem
//   min sum_ij plan(i,j) * cost[i * demand.size() + j]
//   s.t. row sums = supply, column sums = demand, plan >= 0,
// solved exactly by successive shortest augmenting paths on the residual
// network (Bellman-Ford, so reverse arcs with negative cost are fine).
// Costs must be nonnegative and finite. Supply and demand totals must agree
// to within 1e-9; masses below 1e-15 are treated as exhausted.
double min_cost_transport(std::span<const double> supply, std::span<const double> demand,
                          std::span<const double> cost);

}  // namespace expander

#endif  // EXPANDER_TRANSPORT_H_
