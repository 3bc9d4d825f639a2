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

#ifndef EXPANDER_GENERATORS_H_
#define EXPANDER_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "expander/graph.h"

namespace expander {

enum class Family { kDumbbell, kRingOfCliques, kPathOfCliques, kPath, kComplete, kCycle, kRandomRegular };

std::string_view family_name(Family f);
// Accepts both "ring_of_cliques" and "ring-of-cliques" spellings.
Family parse_family(std::string_view name);

// Parameters a family does not use are ignored.
struct GeneratorSpec {
  Family family = Family::kComplete;
  int clique_size = 0;  // dumbbell, path_of_cliques
  int num_cliques = 0;  // ring_of_cliques, path_of_cliques
  int degree = 0;       // ring_of_cliques, random_regular
  int n = 0;            // path, complete, cycle, random_regular
  std::uint64_t seed = 0;

  std::string describe() const;
};

// Node layouts (0-based, contiguous):
//   dumbbell(c):         cliques {0..c-1} and {c..2c-1}, bridge (c-1, c).
//   ring_of_cliques(d,m): clique k holds nodes k(d+1) .. k(d+1)+d; its first
//                        and last node lose their internal edge, and the last
//                        node of clique k links to the first node of k+1 mod m.
//   path_of_cliques(c,m): clique k holds nodes kc .. kc+c-1; last node of
//                        clique k links to the first node of clique k+1.
//   path(n), cycle(n):   consecutive integers adjacent (cycle closes n-1 -- 0).
//   random_regular(n,d): configuration-model pairing, restarted until the
//                        result is simple and connected. For 2d > n-1 the
//                        (n-1-d)-regular complement is paired instead.
Graph generate(const GeneratorSpec& spec);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph dumbbell_graph(int clique_size);
Graph ring_of_cliques(int degree, int num_cliques);
Graph path_of_cliques(int clique_size, int num_cliques);
Graph random_regular_graph(int n, int degree, std::uint64_t seed);

// Full restarts allowed before random_regular_graph gives up.
inline constexpr int kRandomRegularAttempts = 1000000;

}  // namespace expander

#endif  // EXPANDER_GENERATORS_H_
