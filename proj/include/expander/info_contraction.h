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

#ifndef EXPANDER_INFO_CONTRACTION_H_
#define EXPANDER_INFO_CONTRACTION_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace expander {

// KL contraction coefficient of BSC(delta): (1 - 2 delta)^2.
// ParameterError unless 0 <= delta <= 1/2.
double bsc_contraction(double delta);

// Information-decay bound (eta k)^d on I(X_i; Y), in bits. The raw value is
// the bound itself, even when it exceeds one bit; clamped caps it at the
// 1-bit entropy of a uniform binary input.
struct EsBound {
  double eta = 0.0;
  double raw_bits = 0.0;
  double clamped_bits = 0.0;
};

EsBound es_bound(double delta, int fanin, int distance);

// Noise level 1/2 - 1/(2 sqrt k) below which eta * k > 1.
double reliability_threshold(int fanin);

// A gate reads `wires` and looks up its noiseless output in `truth_table`,
// indexed by the input pattern with the first wire as the most significant
// bit. Wire w < n is input X_w; wire n + g is the output of gate g.
struct Gate {
  std::vector<int> wires;
  std::vector<std::uint8_t> truth_table;  // 2^fanin entries, each 0 or 1
};

class NoisyCircuit {
 public:
  inline static constexpr int kMaxFanin = 16;

  // Validates that every gate only reads inputs or earlier gates, that truth
  // tables match the fan-in, and that fan-in <= fanin_bound (default: the
  // largest fan-in present, at least 1). The last gate is the output.
  NoisyCircuit(int inputs, std::vector<Gate> gates, std::optional<int> fanin_bound = std::nullopt);

  int input_count() const { return inputs_; }
  const std::vector<Gate>& gates() const { return gates_; }
  int fanin_bound() const { return fanin_bound_; }
  int output_wire() const { return inputs_ + static_cast<int>(gates_.size()) - 1; }

  // Every input and gate output feeds at most one gate.
  bool is_tree() const { return tree_; }

  // Shortest directed path length (in gates traversed) from input i to the
  // output; nullopt when the output does not depend on X_i structurally.
  std::optional<int> distance_to_output(int input) const;

 private:
  int inputs_;
  std::vector<Gate> gates_;
  int fanin_bound_;
  bool tree_ = true;
  std::vector<std::optional<int>> distance_;
};

// Wire-indexed JSON form:
//   {"inputs": n, "gates": [{"wires": [..], "truth_table": "0110"}, ...],
//    "output": n + #gates - 1, "fanin_bound": k (optional)}
NoisyCircuit parse_circuit_json(const std::string& text);
NoisyCircuit read_circuit_json_file(const std::string& path);
std::string circuit_to_json(const NoisyCircuit& circuit);

inline constexpr int kTreeCircuitMaxInputs = 12;

// P(Y = 1 | X = x) for every assignment x (bit i of the index is X_i), each
// gate failing independently with probability delta. Exact on tree circuits
// only: DomainError for non-trees, CapacityError for more than
// kTreeCircuitMaxInputs inputs.
std::vector<double> tree_output_probabilities(const NoisyCircuit& circuit, double delta);

struct TreeCircuitResult {
  int input = 0;
  double exact_mi_bits = 0.0;  // I(X_i; Y) under uniform i.i.d. inputs
  std::optional<int> distance;
  EsBound bound;               // at distance d_i, fan-in = fanin_bound; zero when unreachable
};

TreeCircuitResult simulate_tree_circuit(const NoisyCircuit& circuit, double delta, int input);
std::vector<TreeCircuitResult> simulate_tree_circuit_all(const NoisyCircuit& circuit, double delta);

// Finite joint probability table, row-major (rows index X, columns Y).
class JointDistribution {
 public:
  // DomainError for negative entries or a total off 1 by more than 1e-12.
  JointDistribution(int rows, int cols, std::vector<double> probabilities);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int x, int y) const {
    return probabilities_[static_cast<std::size_t>(x) * static_cast<std::size_t>(cols_) +
                          static_cast<std::size_t>(y)];
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> probabilities_;
};

// I(X; Y) in bits, with 0 log 0 = 0.
double mutual_information(const JointDistribution& joint);

// Row-stochastic channel matrix: channel[x][y] = K(x, y).
using Channel = std::vector<std::vector<double>>;

// Grid lower bound on the KL contraction coefficient of a binary-input
// channel: the largest D(KP || KQ) / D(P || Q) over P = (a/grid, 1 - a/grid),
// Q = (b/grid, 1 - b/grid) with 0 < D(P || Q) < infinity. Requires grid >= 100.
double estimate_contraction(const Channel& channel, int grid);

Channel binary_symmetric_channel(double delta);

}  // namespace expander

#endif  // EXPANDER_INFO_CONTRACTION_H_
