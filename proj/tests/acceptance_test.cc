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

// Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "expander/cli.h"
#include "expander/edge_list.h"
#include "expander/generators.h"
#include "expander/info_contraction.h"
#include "expander/rewiring.h"
#include "expander/spectral.h"
#include "oracles.h"

namespace expander {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), pattern, value);
  return buffer;
}

// Simple, connected, and with the starting degrees and edge count.
bool invariants_hold(const Graph& g, const std::vector<int>& degrees, std::int64_t edges) {
  if (g.degrees() != degrees || g.edge_count() != edges) return false;
  std::int64_t half_edges = 0;
  for (Node u = 0; u < g.node_count(); ++u) {
    const auto nbrs = g.neighbors(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (nbrs[k] == u || (k > 0 && nbrs[k - 1] >= nbrs[k])) return false;
      if (!g.has_edge(nbrs[k], u)) return false;
    }
    half_edges += static_cast<std::int64_t>(nbrs.size());
  }
  return half_edges == 2 * edges && is_connected(g);
}

Verdict degree_and_connectivity() {
  const auto start = Clock::now();
  std::mt19937_64 gen(20240601);
  std::uniform_int_distribution<int> size(8, 60);
  long long steps = 0;
  long long violations = 0;
  long long applied = 0;
  for (int graph = 0; graph < 50; ++graph) {
    const int n = size(gen);
    std::uniform_int_distribution<int> extra_dist(0, 2 * n);
    const Graph start_graph = testing::random_connected_graph(n, extra_dist(gen), gen);
    const auto degrees = start_graph.degrees();
    const auto edges = start_graph.edge_count();
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      for (Algorithm algo : {Algorithm::kRlef, Algorithm::kGrlef}) {
        Graph g = start_graph;
        RngStream rng(seed * 1000 + static_cast<std::uint64_t>(graph));
        for (int step = 0; step < 10000; ++step) {
          const StepOutcome outcome =
              algo == Algorithm::kRlef ? rlef_step(g, rng) : grlef_step(g, kDefaultTau, rng);
          applied += outcome.applied ? 1 : 0;
          ++steps;
          if (!invariants_hold(g, degrees, edges)) ++violations;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  Verdict v;
  v.pass = violations == 0 && elapsed < 300.0;
  v.detail = std::to_string(steps) + " steps (" + std::to_string(applied) + " flips applied), " +
             std::to_string(violations) + " violations, " + fmt("%.1f s", elapsed) + " (limit 300 s)";
  return v;
}

Verdict resistance_bound() {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> size(2, 50);
  double worst_excess = -1e300;
  long long edges_checked = 0;
  for (int graph = 0; graph < 100; ++graph) {
    const int n = size(gen);
    std::uniform_int_distribution<int> extra_dist(0, 3 * n);
    const Graph g = testing::random_connected_graph(n, extra_dist(gen), gen);
    const ResistanceCalculator r(g);
    for (const Edge& e : g.edges()) {
      worst_excess = std::max(worst_excess, r.resistance(e.first, e.second) -
                                                triangle_resistance_bound(g, e.first, e.second));
      ++edges_checked;
    }
  }
  double worst_equality = 0.0;
  for (int n = 2; n <= 30; ++n) {
    const Graph k = complete_graph(n);
    const ResistanceCalculator r(k);
    for (const Edge& e : k.edges()) {
      const double value = r.resistance(e.first, e.second);
      worst_equality = std::max({worst_equality, std::abs(value - 2.0 / n),
                                 std::abs(value - triangle_resistance_bound(k, e.first, e.second))});
    }
  }
  Verdict v;
  v.pass = worst_excess <= 1e-9 && worst_equality <= 1e-9;
  v.detail = std::to_string(edges_checked) + " edges, max(R - bound) = " + fmt("%.3g", worst_excess) +
             "; complete graphs n=2..30 max |R - 2/n| = " + fmt("%.3g", worst_equality);
  return v;
}

Verdict cheeger_sandwich() {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (int n = 3; n <= 14; ++n) graphs.emplace_back("cycle" + std::to_string(n), cycle_graph(n));
  for (int n = 2; n <= 14; ++n) graphs.emplace_back("K" + std::to_string(n), complete_graph(n));
  for (int n = 4; n <= 14; ++n) {
    for (int d = 3; d < n; ++d) {
      if ((n * d) % 2) continue;
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        graphs.emplace_back("rr" + std::to_string(n) + "," + std::to_string(d), random_regular_graph(n, d, seed));
      }
    }
  }
  graphs.emplace_back("ring_of_cliques(3,4)", ring_of_cliques(3, 4));
  int failures = 0;
  std::string first_failure;
  for (const auto& [name, g] : graphs) {
    const double h = cheeger_exact(g).exact->ratio.value();
    const CheegerReport b = cheeger_bounds(g);
    if (h < *b.spectral_lower - 1e-9 || h > *b.spectral_upper + 1e-9) {
      if (failures++ == 0) first_failure = name;
    }
  }
  Verdict v;
  v.pass = failures == 0;
  v.detail = std::to_string(graphs.size()) + " regular graphs, " + std::to_string(failures) + " outside bounds" +
             (failures ? " (first: " + first_failure + ")" : "");
  return v;
}

Verdict cheeger_examples() {
  int mismatches = 0;
  for (int n = 3; n <= 10; ++n) {
    const Rational k = cheeger_exact(complete_graph(n)).exact->ratio;
    if (k.numerator != (n + 1) / 2 || k.denominator != 1) ++mismatches;
  }
  for (int n = 2; n <= 20; ++n) {
    const Rational p = cheeger_exact(path_graph(n)).exact->ratio;
    if (p.numerator != 1 || p.denominator != n / 2) ++mismatches;
    if (n % 2 == 0 && std::abs(p.value() - 2.0 / n) > 1e-15) ++mismatches;
  }
  Verdict v;
  v.pass = mismatches == 0;
  v.detail = "K_n for n=3..10 and path_n for n=2..20, " + std::to_string(mismatches) + " mismatches";
  return v;
}

Verdict information_decay() {
  std::mt19937_64 gen(4242);
  std::uniform_int_distribution<int> inputs(1, 8);
  double worst = -1e300;
  int enumerated = 0;
  double worst_dp = 0.0;
  for (int c = 0; c < 200; ++c) {
    const NoisyCircuit circuit = testing::random_tree_circuit(inputs(gen), 3, gen);
    const bool small = circuit.input_count() + static_cast<int>(circuit.gates().size()) <= 16;
    enumerated += small ? 1 : 0;
    for (double delta : {0.05, 0.1, 0.2, 0.4}) {
      for (const auto& r : simulate_tree_circuit_all(circuit, delta)) {
        worst = std::max(worst, r.exact_mi_bits - r.bound.raw_bits);
      }
      if (small) {
        const auto dp = tree_output_probabilities(circuit, delta);
        const auto brute = testing::failure_enumeration_probabilities(circuit, delta);
        for (std::size_t x = 0; x < dp.size(); ++x) worst_dp = std::max(worst_dp, std::abs(dp[x] - brute[x]));
      }
    }
  }
  Verdict v;
  v.pass = worst <= 1e-9 && worst_dp <= 1e-12 && enumerated > 0;
  v.detail = "200 circuits, max(I - bound) = " + fmt("%.3g", worst) + "; DP vs enumeration on " +
             std::to_string(enumerated) + " circuits, max diff " + fmt("%.3g", worst_dp);
  return v;
}

// First recorded iteration at which the gap reaches half its final value.
std::int64_t half_gap_iteration(const RewireTrace& trace) {
  const double target = trace.records.back().normalized_gap / 2.0;
  for (const TraceRecord& r : trace.records) {
    if (r.normalized_gap >= target) return r.iteration;
  }
  return trace.records.back().iteration;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

constexpr std::int64_t kDumbbellIterations = 4000;
constexpr std::int64_t kDumbbellMetricEvery = 5;

// Saturated: the mean gap over the last tenth of the run is within 5% of the
// mean over the tenth before it.
bool saturated(const RewireTrace& trace) {
  const std::size_t count = trace.records.size();
  const std::size_t window = std::max<std::size_t>(1, count / 10);
  double late = 0.0;
  double earlier = 0.0;
  for (std::size_t k = count - window; k < count; ++k) late += trace.records[k].normalized_gap;
  for (std::size_t k = count - 2 * window; k < count - window; ++k) earlier += trace.records[k].normalized_gap;
  return std::abs(late - earlier) <= 0.05 * late;
}

Verdict dumbbell_reproduction() {
  const auto start = Clock::now();
  const Graph g = dumbbell_graph(25);
  std::vector<double> half_grlef;
  std::vector<double> half_rlef;
  double worst_start_gap = 0.0;
  double worst_triangle_ratio = 0.0;
  double worst_rlef_triangle_ratio = 0.0;
  int unsaturated = 0;
  int no_rise = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (Algorithm algo : {Algorithm::kGrlef, Algorithm::kRlef}) {
      const RunResult r = run(g, algo, kDumbbellIterations, kDefaultTau, seed, kDumbbellMetricEvery);
      const auto& records = r.trace.records;
      worst_start_gap = std::max(worst_start_gap, records.front().normalized_gap);
      if (!(records.back().normalized_gap > records.front().normalized_gap)) ++no_rise;
      if (!saturated(r.trace)) ++unsaturated;
      const double ratio = static_cast<double>(records.back().triangles) / records.front().triangles;
      if (algo == Algorithm::kGrlef) {
        half_grlef.push_back(static_cast<double>(half_gap_iteration(r.trace)));
        worst_triangle_ratio = std::max(worst_triangle_ratio, ratio);
      } else {
        half_rlef.push_back(static_cast<double>(half_gap_iteration(r.trace)));
        worst_rlef_triangle_ratio = std::max(worst_rlef_triangle_ratio, ratio);
      }
    }
  }
  const double elapsed = seconds_since(start);
  const double m_grlef = median(half_grlef);
  const double m_rlef = median(half_rlef);
  std::vector<std::string> failed;
  if (!(m_grlef < m_rlef)) failed.push_back("half-gap ordering");
  if (!(worst_start_gap < 0.05)) failed.push_back("start gap");
  if (no_rise || unsaturated) failed.push_back("gap saturation");
  if (!(worst_triangle_ratio < 0.2)) failed.push_back("G-RLEF triangles < 20%");
  if (!(worst_rlef_triangle_ratio < 0.2)) failed.push_back("RLEF triangles < 20%");
  if (!(elapsed < 600.0)) failed.push_back("runtime");
  std::string failed_list;
  for (const auto& f : failed) failed_list += (failed_list.empty() ? "" : ", ") + f;
  Verdict v;
  v.pass = failed.empty();
  v.detail = (failed.empty() ? "" : "failed: " + failed_list + "; ") + "median half-gap iteration G-RLEF " + fmt("%.0f", m_grlef) + " vs RLEF " + fmt("%.0f", m_rlef) +
             "; start gap max " + fmt("%.4f", worst_start_gap) + "; " + std::to_string(unsaturated) +
             " unsaturated, " + std::to_string(no_rise) + " without rise; final/initial triangles max G-RLEF " +
             fmt("%.3f", worst_triangle_ratio) + ", RLEF " + fmt("%.3f", worst_rlef_triangle_ratio) + "; " +
             fmt("%.1f s", elapsed) + " (limit 600 s)";
  return v;
}

constexpr std::int64_t kSdrfRingIterations = 400;

Verdict ring_connectivity() {
  const Graph g = ring_of_cliques(4, 50);
  int grlef_disconnected_records = 0;
  int sdrf_disconnected_seeds = 0;
  std::string first_disconnect;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const RunResult grlef = run(g, Algorithm::kGrlef, 5000, kDefaultTau, seed, 10);
    for (const TraceRecord& r : grlef.trace.records) grlef_disconnected_records += r.connected ? 0 : 1;
    const RunResult sdrf = run(g, Algorithm::kSdrf, kSdrfRingIterations, std::nullopt, seed, 1);
    for (const TraceRecord& r : sdrf.trace.records) {
      if (!r.connected) {
        ++sdrf_disconnected_seeds;
        first_disconnect += (first_disconnect.empty() ? "" : ", ") + std::string("seed ") + std::to_string(seed) +
                            " at iteration " + std::to_string(r.iteration);
        break;
      }
    }
  }
  Verdict v;
  v.pass = grlef_disconnected_records == 0 && sdrf_disconnected_seeds == 3;
  v.detail = "G-RLEF 3 seeds x 5000 iterations, " + std::to_string(grlef_disconnected_records) +
             " disconnected records; SDRF disconnected on " + std::to_string(sdrf_disconnected_seeds) +
             "/3 seeds within " + std::to_string(kSdrfRingIterations) + " iterations" +
             (first_disconnect.empty() ? "" : " (" + first_disconnect + ")");
  return v;
}

Verdict contraction_estimator() {
  double worst_low = 1e300;
  double worst_high = -1e300;
  for (double delta : {0.05, 0.1, 0.25, 0.4}) {
    const double exact = bsc_contraction(delta);
    const double estimate = estimate_contraction(binary_symmetric_channel(delta), 1000);
    worst_low = std::min(worst_low, estimate - (exact - 0.01));
    worst_high = std::max(worst_high, estimate - exact);
  }
  Verdict v;
  v.pass = worst_low >= 0.0 && worst_high <= 0.0;
  v.detail = "min(estimate - (eta - 0.01)) = " + fmt("%.3g", worst_low) + ", max(estimate - eta) = " +
             fmt("%.3g", worst_high);
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict rewire_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "expander_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_edge_list_file((dir / "g.el").string(), dumbbell_graph(10));
  int differing = 0;
  int failed_runs = 0;
  for (const char* algo : {"rlef", "grlef", "sdrf"}) {
    std::string traces[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path trace = dir / ("t" + std::to_string(k) + ".csv");
      std::ostringstream out, err;
      const int code = cli::run({"expander_rewire", "rewire", "--algo", algo, "--iters", "300", "--tau", "5",
                                 "--seed", "42", "--in", (dir / "g.el").string(), "--trace", trace.string(),
                                 "--metric-every", "7"},
                                out, err);
      if (code != 0) ++failed_runs;
      traces[k] = slurp(trace);
    }
    if (traces[0] != traces[1] || traces[0].empty()) ++differing;
  }
  fs::remove_all(dir);
  Verdict v;
  v.pass = differing == 0 && failed_runs == 0;
  v.detail = "rlef/grlef/sdrf, " + std::to_string(differing) + " differing trace pairs, " +
             std::to_string(failed_runs) + " failed runs";
  return v;
}

}  // namespace
}  // namespace expander

int main() {
  using expander::Verdict;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"degree/connectivity preservation", expander::degree_and_connectivity},
      {"resistance triangle bound", expander::resistance_bound},
      {"Cheeger sandwich", expander::cheeger_sandwich},
      {"Cheeger constants of K_n and paths", expander::cheeger_examples},
      {"information decay on tree circuits", expander::information_decay},
      {"dumbbell G-RLEF vs RLEF", expander::dumbbell_reproduction},
      {"ring-of-cliques connectivity", expander::ring_connectivity},
      {"contraction estimator", expander::contraction_estimator},
      {"rewire determinism", expander::rewire_determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("%s [%d] %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
