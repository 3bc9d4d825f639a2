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

#include "expander/info_contraction.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "expander/errors.h"

namespace expander {

namespace {

void check_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw ParameterError("noise level delta must lie in [0, 1/2], got " + std::to_string(delta));
  }
}

// KL divergence in nats; +infinity when P is not absolutely continuous wrt Q.
double kl_divergence(const std::vector<double>& p, const std::vector<double>& q) {
  double total = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    if (q[k] <= 0.0) return std::numeric_limits<double>::infinity();
    total += p[k] * std::log(p[k] / q[k]);
  }
  return total;
}

std::vector<double> push_forward(const Channel& channel, double p0) {
  const std::size_t outputs = channel[0].size();
  std::vector<double> out(outputs);
  // Written as a correction to row 1 so identical rows give identical outputs.
  for (std::size_t y = 0; y < outputs; ++y) out[y] = channel[1][y] + p0 * (channel[0][y] - channel[1][y]);
  return out;
}

}  // namespace

double bsc_contraction(double delta) {
  check_delta(delta);
  const double r = 1.0 - 2.0 * delta;
  return r * r;
}

EsBound es_bound(double delta, int fanin, int distance) {
  check_delta(delta);
  if (fanin < 1) throw ParameterError("fan-in must be at least 1");
  if (distance < 0) throw ParameterError("distance must be nonnegative");
  EsBound bound;
  bound.eta = bsc_contraction(delta);
  bound.raw_bits = std::pow(bound.eta * fanin, distance);
  bound.clamped_bits = std::min(bound.raw_bits, 1.0);
  return bound;
}

double reliability_threshold(int fanin) {
  if (fanin < 1) throw ParameterError("fan-in must be at least 1");
  return 0.5 - 0.5 / std::sqrt(static_cast<double>(fanin));
}

NoisyCircuit::NoisyCircuit(int inputs, std::vector<Gate> gates, std::optional<int> fanin_bound)
    : inputs_(inputs), gates_(std::move(gates)) {
  if (inputs_ < 0) throw ParameterError("circuit input count must be nonnegative");
  if (gates_.empty()) throw ParameterError("circuit needs at least one gate (the output)");
  const int wires = inputs_ + static_cast<int>(gates_.size());
  std::vector<int> fanout(static_cast<std::size_t>(wires), 0);
  int widest = 1;
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gate = gates_[g];
    const int self = inputs_ + static_cast<int>(g);
    const int fanin = static_cast<int>(gate.wires.size());
    if (fanin > kMaxFanin) throw ParameterError("gate " + std::to_string(g) + " has fan-in above 16");
    if (gate.truth_table.size() != (std::size_t{1} << fanin)) {
      throw ParameterError("gate " + std::to_string(g) + " truth table needs 2^" + std::to_string(fanin) +
                           " entries");
    }
    for (std::uint8_t bit : gate.truth_table) {
      if (bit > 1) throw ParameterError("truth table entries must be 0 or 1");
    }
    for (int w : gate.wires) {
      if (w < 0 || w >= self) {
        throw ParameterError("gate " + std::to_string(g) + " reads wire " + std::to_string(w) +
                             ", which is not an input or an earlier gate");
      }
      if (++fanout[static_cast<std::size_t>(w)] > 1) tree_ = false;
    }
    widest = std::max(widest, fanin);
  }
  fanin_bound_ = fanin_bound.value_or(widest);
  if (fanin_bound_ < widest) {
    throw ParameterError("a gate exceeds the declared fan-in bound " + std::to_string(fanin_bound_));
  }

  // Gates only read earlier wires, so one backward sweep settles distances.
  std::vector<std::optional<int>> to_output(static_cast<std::size_t>(wires));
  to_output[static_cast<std::size_t>(wires - 1)] = 0;
  for (int g = static_cast<int>(gates_.size()) - 1; g >= 0; --g) {
    const auto here = to_output[static_cast<std::size_t>(inputs_ + g)];
    if (!here) continue;
    for (int w : gates_[static_cast<std::size_t>(g)].wires) {
      auto& d = to_output[static_cast<std::size_t>(w)];
      if (!d || *d > *here + 1) d = *here + 1;
    }
  }
  distance_.assign(to_output.begin(), to_output.begin() + inputs_);
}

std::optional<int> NoisyCircuit::distance_to_output(int input) const {
  if (input < 0 || input >= inputs_) throw IndexError("circuit input " + std::to_string(input) + " out of range");
  return distance_[static_cast<std::size_t>(input)];
}

std::vector<double> tree_output_probabilities(const NoisyCircuit& circuit, double delta) {
  check_delta(delta);
  if (!circuit.is_tree()) {
    throw DomainError("exact simulation needs a tree circuit; shared wires correlate gate inputs");
  }
  const int n = circuit.input_count();
  if (n > kTreeCircuitMaxInputs) {
    throw CapacityError("exact simulation enumerates 2^n assignments and is limited to n <= " +
                        std::to_string(kTreeCircuitMaxInputs));
  }
  const auto& gates = circuit.gates();
  std::vector<double> one(static_cast<std::size_t>(n) + gates.size());
  std::vector<double> out(std::size_t{1} << n);
  for (std::size_t x = 0; x < out.size(); ++x) {
    for (int i = 0; i < n; ++i) one[static_cast<std::size_t>(i)] = static_cast<double>((x >> i) & 1u);
    for (std::size_t g = 0; g < gates.size(); ++g) {
      const Gate& gate = gates[g];
      const std::size_t fanin = gate.wires.size();
      // On a tree the gate's inputs are independent given x.
      double q = 0.0;
      for (std::size_t pattern = 0; pattern < gate.truth_table.size(); ++pattern) {
        if (!gate.truth_table[pattern]) continue;
        double weight = 1.0;
        for (std::size_t t = 0; t < fanin; ++t) {
          const double p = one[static_cast<std::size_t>(gate.wires[t])];
          weight *= ((pattern >> (fanin - 1 - t)) & 1u) ? p : 1.0 - p;
        }
        q += weight;
      }
      one[static_cast<std::size_t>(n) + g] = (1.0 - delta) * q + delta * (1.0 - q);
    }
    out[x] = one.back();
  }
  return out;
}

namespace {

TreeCircuitResult result_for_input(const NoisyCircuit& circuit, double delta, int input,
                                   const std::vector<double>& p_one) {
  const double weight = 1.0 / static_cast<double>(p_one.size());
  std::vector<double> table(4, 0.0);  // (x_i, y)
  for (std::size_t x = 0; x < p_one.size(); ++x) {
    const std::size_t xi = (x >> input) & 1u;
    table[xi * 2 + 1] += weight * p_one[x];
    table[xi * 2 + 0] += weight * (1.0 - p_one[x]);
  }
  TreeCircuitResult result;
  result.input = input;
  result.exact_mi_bits = mutual_information(JointDistribution(2, 2, std::move(table)));
  result.distance = circuit.distance_to_output(input);
  if (result.distance) {
    result.bound = es_bound(delta, circuit.fanin_bound(), *result.distance);
  } else {
    // No path: Y is independent of X_i and the bound is zero.
    result.bound.eta = bsc_contraction(delta);
  }
  return result;
}

}  // namespace

TreeCircuitResult simulate_tree_circuit(const NoisyCircuit& circuit, double delta, int input) {
  if (input < 0 || input >= circuit.input_count()) {
    throw IndexError("circuit input " + std::to_string(input) + " out of range");
  }
  return result_for_input(circuit, delta, input, tree_output_probabilities(circuit, delta));
}

std::vector<TreeCircuitResult> simulate_tree_circuit_all(const NoisyCircuit& circuit, double delta) {
  const auto p_one = tree_output_probabilities(circuit, delta);
  std::vector<TreeCircuitResult> out;
  for (int i = 0; i < circuit.input_count(); ++i) out.push_back(result_for_input(circuit, delta, i, p_one));
  return out;
}

JointDistribution::JointDistribution(int rows, int cols, std::vector<double> probabilities)
    : rows_(rows), cols_(cols), probabilities_(std::move(probabilities)) {
  if (rows_ < 1 || cols_ < 1 ||
      probabilities_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
    throw DomainError("joint table shape does not match its entries");
  }
  double total = 0.0;
  for (double p : probabilities_) {
    if (!(p >= 0.0)) throw DomainError("joint table has a negative entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("joint table does not sum to 1");
}

double mutual_information(const JointDistribution& joint) {
  std::vector<double> px(static_cast<std::size_t>(joint.rows()), 0.0);
  std::vector<double> py(static_cast<std::size_t>(joint.cols()), 0.0);
  for (int x = 0; x < joint.rows(); ++x) {
    for (int y = 0; y < joint.cols(); ++y) {
      px[static_cast<std::size_t>(x)] += joint(x, y);
      py[static_cast<std::size_t>(y)] += joint(x, y);
    }
  }
  double bits = 0.0;
  for (int x = 0; x < joint.rows(); ++x) {
    for (int y = 0; y < joint.cols(); ++y) {
      const double p = joint(x, y);
      if (p <= 0.0) continue;
      bits += p * std::log2(p / (px[static_cast<std::size_t>(x)] * py[static_cast<std::size_t>(y)]));
    }
  }
  return std::max(bits, 0.0);
}

Channel binary_symmetric_channel(double delta) {
  check_delta(delta);
  return {{1.0 - delta, delta}, {delta, 1.0 - delta}};
}

double estimate_contraction(const Channel& channel, int grid) {
  if (grid < 100) throw ParameterError("contraction grid resolution must be at least 100");
  if (channel.size() != 2) throw DomainError("contraction estimator needs a binary-input channel");
  if (channel[0].empty() || channel[0].size() != channel[1].size()) {
    throw DomainError("channel rows must have equal, nonzero length");
  }
  for (const auto& row : channel) {
    double total = 0.0;
    for (double k : row) {
      if (!(k >= 0.0)) throw DomainError("channel has a negative entry");
      total += k;
    }
    if (std::abs(total - 1.0) > 1e-9) throw DomainError("channel rows must sum to 1");
  }

  std::vector<std::vector<double>> outputs;
  outputs.reserve(static_cast<std::size_t>(grid) + 1);
  for (int a = 0; a <= grid; ++a) outputs.push_back(push_forward(channel, static_cast<double>(a) / grid));

  double best = 0.0;
  for (int a = 0; a <= grid; ++a) {
    const double p = static_cast<double>(a) / grid;
    for (int b = 0; b <= grid; ++b) {
      if (a == b) continue;
      const double q = static_cast<double>(b) / grid;
      const double input_div = kl_divergence({p, 1.0 - p}, {q, 1.0 - q});
      if (!(input_div > 0.0) || !std::isfinite(input_div)) continue;
      const double output_div =
          kl_divergence(outputs[static_cast<std::size_t>(a)], outputs[static_cast<std::size_t>(b)]);
      best = std::max(best, output_div / input_div);
    }
  }
  return best;
}

}  // namespace expander
