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

#include "expander/cli.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "expander/curvature.h"
#include "expander/edge_list.h"
#include "expander/errors.h"
#include "expander/generators.h"
#include "expander/info_contraction.h"
#include "expander/rewiring.h"
#include "expander/spectral.h"
#include "expander/trace_io.h"

namespace expander::cli {

namespace {

struct GenerateOptions {
  std::string family;
  GeneratorSpec spec;
  std::string out;
};

struct RewireOptions {
  std::string algo;
  std::int64_t iterations = 0;
  double tau = kDefaultTau;
  std::uint64_t seed = 0;
  std::string seeds;
  std::string in;
  std::string out;
  std::string trace;
  std::string meta;
  std::string plot;
  std::int64_t metric_every = 1;
};

struct MetricsOptions {
  std::string in;
  std::string out;
  std::string format = "json";
  bool norm_gap = false;
  bool gap = false;
  bool triangles = false;
  bool cheeger_exact = false;
  bool cheeger_bounds = false;
  bool effective_resistance = false;
  bool curvature = false;
  bool kantorovich = false;
};

struct InfoBoundOptions {
  std::vector<double> deltas;
  std::optional<int> fanin;
  std::optional<int> distance;
  std::string circuit;
  std::string out;
};

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer writer) {
  if (path.empty() || path == "-") {
    writer(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  writer(file);
  if (!file) throw IoError("write to '" + path + "' failed");
}

int cmd_generate(const GenerateOptions& opt) {
  GeneratorSpec spec = opt.spec;
  spec.family = parse_family(opt.family);
  const Graph g = generate(spec);
  write_edge_list_file(opt.out, g);
  return kOk;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParameterError("--seeds expects a range a..b");
  try {
    const auto first = std::stoull(text.substr(0, dots));
    const auto last = std::stoull(text.substr(dots + 2));
    if (last < first) throw ParameterError("--seeds range is empty");
    return {first, last};
  } catch (const std::logic_error&) {
    throw ParameterError("--seeds expects a range a..b of unsigned integers");
  }
}

unsigned thread_cap() {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EXPANDER_REWIRE_THREADS")) {
    try {
      cap = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::logic_error&) {
      throw ParameterError("EXPANDER_REWIRE_THREADS must be a positive integer");
    }
  }
  return cap;
}

// Two polylines over the iteration axis: normalized gap, and triangle count
// relative to its maximum.
void write_trace_svg(std::ostream& out, const RewireTrace& trace) {
  const double width = 640;
  const double height = 360;
  const double margin = 40;
  const double last_iter = std::max<double>(1.0, static_cast<double>(trace.records.back().iteration));
  double max_gap = 1e-12;
  double max_tri = 1.0;
  for (const auto& r : trace.records) {
    max_gap = std::max(max_gap, r.normalized_gap);
    max_tri = std::max(max_tri, static_cast<double>(r.triangles));
  }
  auto polyline = [&](const char* colour, auto value) {
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : trace.records) {
      const double x = margin + (width - 2 * margin) * static_cast<double>(r.iteration) / last_iter;
      const double y = height - margin - (height - 2 * margin) * value(r);
      out << format_real(x) << ',' << format_real(y) << ' ';
    }
    out << "\"/>\n";
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << margin << "\" y=\"20\" font-size=\"12\">" << algorithm_name(trace.algorithm)
      << ": normalized gap (blue, max " << format_real(max_gap) << "), triangles (orange, max "
      << format_real(max_tri) << ")</text>\n";
  polyline("#1f77b4", [&](const TraceRecord& r) { return r.normalized_gap / max_gap; });
  polyline("#ff7f0e", [&](const TraceRecord& r) { return static_cast<double>(r.triangles) / max_tri; });
  out << "</svg>\n";
}

void rewire_once(const RewireOptions& opt, const Graph& input, Algorithm algo, std::uint64_t seed,
                 bool suffix) {
  auto name = [&](const std::string& path) { return suffix ? with_seed_suffix(path, seed) : path; };
  RunResult result = run(input, algo, opt.iterations,
                         algo == Algorithm::kGrlef ? std::optional<double>(opt.tau) : std::nullopt, seed,
                         opt.metric_every);
  if (!opt.out.empty()) write_edge_list_file(name(opt.out), result.graph);
  if (!opt.trace.empty()) {
    emit(name(opt.trace), std::cout, [&](std::ostream& s) { write_trace_csv(s, result.trace); });
    const std::string meta = opt.meta.empty() ? name(opt.trace) + ".json" : name(opt.meta);
    emit(meta, std::cout, [&](std::ostream& s) { write_trace_metadata(s, result.trace, opt.in); });
  }
  if (!opt.plot.empty()) {
    emit(name(opt.plot), std::cout, [&](std::ostream& s) { write_trace_svg(s, result.trace); });
  }
}

int cmd_rewire(const RewireOptions& opt) {
  const Algorithm algo = parse_algorithm(opt.algo);
  if (opt.iterations < 0) throw ParameterError("--iters must be nonnegative");
  const Graph input = read_edge_list_file(opt.in);
  if (opt.seeds.empty()) {
    rewire_once(opt, input, algo, opt.seed, false);
    return kOk;
  }

  const auto [first, last] = parse_seed_range(opt.seeds);
  std::atomic<std::uint64_t> next{first};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t seed = next++; seed <= last; seed = next++) {
      try {
        rewire_once(opt, input, algo, seed, true);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const auto count = static_cast<unsigned>(std::min<std::uint64_t>(last - first + 1, thread_cap()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return kOk;
}

struct MetricRow {
  std::string metric;
  std::optional<Edge> edge;
  double value;
};

int cmd_metrics(const MetricsOptions& opt, std::ostream& out) {
  if (opt.format != "json" && opt.format != "csv") throw ParameterError("--format must be json or csv");
  const Graph g = read_edge_list_file(opt.in);
  const bool any = opt.norm_gap || opt.gap || opt.triangles || opt.cheeger_exact || opt.cheeger_bounds ||
                   opt.effective_resistance || opt.curvature || opt.kantorovich;

  std::vector<MetricRow> rows;
  nlohmann::ordered_json doc;
  doc["n"] = g.node_count();
  doc["m"] = g.edge_count();
  doc["connected"] = is_connected(g);

  if (!any || opt.norm_gap || opt.gap) {
    const SpectrumReport s = spectrum(g);
    if (!any || opt.norm_gap) {
      doc["norm_gap"] = s.normalized_gap;
      rows.push_back({"norm_gap", std::nullopt, s.normalized_gap});
    }
    if (!any || opt.gap) {
      doc["gap"] = s.gap;
      rows.push_back({"gap", std::nullopt, s.gap});
    }
  }
  if (!any || opt.triangles) {
    const auto t = triangle_count(g);
    doc["triangles"] = t;
    rows.push_back({"triangles", std::nullopt, static_cast<double>(t)});
  }
  if (opt.cheeger_exact) {
    const CheegerExact exact = *cheeger_exact(g).exact;
    doc["cheeger_exact"] = exact.ratio.value();
    doc["cheeger_exact_ratio"] = {exact.ratio.numerator, exact.ratio.denominator};
    doc["cheeger_witness"] = exact.witness;
    rows.push_back({"cheeger_exact", std::nullopt, exact.ratio.value()});
  }
  if (opt.cheeger_bounds) {
    const CheegerReport b = cheeger_bounds(g);
    doc["cheeger_lower"] = *b.spectral_lower;
    doc["cheeger_upper"] = *b.spectral_upper;
    rows.push_back({"cheeger_lower", std::nullopt, *b.spectral_lower});
    rows.push_back({"cheeger_upper", std::nullopt, *b.spectral_upper});
  }
  if (opt.kantorovich) {
    const KantorovichResult k = kantorovich_norm(g);
    doc["kantorovich_norm"] = k.norm;
    doc["graph_curvature"] = k.curvature;
    rows.push_back({"kantorovich_norm", std::nullopt, k.norm});
    rows.push_back({"graph_curvature", std::nullopt, k.curvature});
  }
  if (opt.effective_resistance || opt.curvature) {
    const auto edges = g.edges();
    std::optional<ResistanceCalculator> resistance;
    if (opt.effective_resistance) resistance.emplace(g);
    std::vector<double> curvature;
    if (opt.curvature) curvature = edge_curvatures(g);
    nlohmann::ordered_json per_edge = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      nlohmann::ordered_json item{{"u", edges[k].first}, {"v", edges[k].second}};
      if (resistance) {
        const double r = resistance->resistance(edges[k].first, edges[k].second);
        item["effective_resistance"] = r;
        rows.push_back({"effective_resistance", edges[k], r});
      }
      if (opt.curvature) {
        item["curvature"] = curvature[k];
        rows.push_back({"curvature", edges[k], curvature[k]});
      }
      per_edge.push_back(std::move(item));
    }
    doc["edges"] = std::move(per_edge);
  }

  emit(opt.out, out, [&](std::ostream& s) {
    if (opt.format == "json") {
      s << doc.dump(2) << '\n';
      return;
    }
    s << "metric,u,v,value\n";
    for (const auto& row : rows) {
      s << row.metric << ',';
      if (row.edge) s << row.edge->first << ',' << row.edge->second;
      else s << ',';
      s << ',' << format_real(row.value) << '\n';
    }
  });
  return kOk;
}

int cmd_info_bound(const InfoBoundOptions& opt, std::ostream& out) {
  if (opt.deltas.empty()) throw ParameterError("--delta is required");
  if (!opt.circuit.empty()) {
    const NoisyCircuit circuit = read_circuit_json_file(opt.circuit);
    emit(opt.out, out, [&](std::ostream& s) {
      s << "delta,k,d,eta,bound_bits,exact_mi_bits\n";
      for (double delta : opt.deltas) {
        for (const TreeCircuitResult& r : simulate_tree_circuit_all(circuit, delta)) {
          s << format_real(delta) << ',' << circuit.fanin_bound() << ','
            << (r.distance ? std::to_string(*r.distance) : std::string("inf")) << ','
            << format_real(r.bound.eta) << ',' << format_real(r.bound.raw_bits) << ','
            << format_real(r.exact_mi_bits) << '\n';
        }
      }
    });
    return kOk;
  }
  if (!opt.fanin || !opt.distance) {
    throw ParameterError("scalar mode needs --fanin and --distance (or pass --circuit)");
  }
  std::vector<EsBound> bounds;
  for (double delta : opt.deltas) bounds.push_back(es_bound(delta, *opt.fanin, *opt.distance));
  emit(opt.out, out, [&](std::ostream& s) {
    s << "delta,k,d,eta,bound_bits,clamped_bits\n";
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      s << format_real(opt.deltas[k]) << ',' << *opt.fanin << ',' << *opt.distance << ','
        << format_real(bounds[k].eta) << ',' << format_real(bounds[k].raw_bits) << ','
        << format_real(bounds[k].clamped_bits) << '\n';
    }
  });
  return kOk;
}

}  // namespace

std::string with_seed_suffix(const std::string& path, unsigned long long seed) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  const std::string tag = ".seed" + std::to_string(seed);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash) || dot == 0 ||
      (slash != std::string::npos && dot == slash + 1)) {
    return path + tag;
  }
  return path.substr(0, dot) + tag + path.substr(dot);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-preserving graph rewiring toward expanders, with spectral, curvature and "
               "information-decay metrics"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  generate_cmd->add_option("--family", gen.family,
                           "dumbbell, ring-of-cliques, path-of-cliques, path, complete, cycle, random-regular")
      ->required();
  generate_cmd->add_option("--clique-size", gen.spec.clique_size, "Clique size c (dumbbell, path-of-cliques)");
  generate_cmd->add_option("--num-cliques", gen.spec.num_cliques, "Number of cliques m");
  generate_cmd->add_option("--degree", gen.spec.degree, "Degree d (ring-of-cliques, random-regular)");
  generate_cmd->add_option("--n", gen.spec.n, "Node count (path, complete, cycle, random-regular)");
  generate_cmd->add_option("--seed", gen.spec.seed, "Seed (random-regular)");
  generate_cmd->add_option("--out", gen.out, "Output edge-list path")->required();

  RewireOptions rew;
  auto* rewire_cmd = app.add_subcommand("rewire", "Run RLEF, G-RLEF or SDRF and record a metric trace");
  rewire_cmd->add_option("--algo", rew.algo, "rlef, grlef or sdrf")->required();
  rewire_cmd->add_option("--iters", rew.iterations, "Number of rewiring steps")->required();
  rewire_cmd->add_option("--tau", rew.tau, "G-RLEF inverse temperature")->capture_default_str();
  rewire_cmd->add_option("--seed", rew.seed, "RNG seed")->capture_default_str();
  rewire_cmd->add_option("--seeds", rew.seeds, "Run seeds a..b in parallel; outputs get a .seed<N> suffix");
  rewire_cmd->add_option("--in", rew.in, "Input edge list")->required();
  rewire_cmd->add_option("--out", rew.out, "Rewired edge-list output");
  rewire_cmd->add_option("--trace", rew.trace, "Trace CSV output");
  rewire_cmd->add_option("--meta", rew.meta, "Metadata JSON output (default: <trace>.json)");
  rewire_cmd->add_option("--plot", rew.plot, "Optional SVG chart of the trace");
  rewire_cmd->add_option("--metric-every", rew.metric_every, "Record metrics every N steps")
      ->capture_default_str();

  MetricsOptions met;
  auto* metrics_cmd = app.add_subcommand("metrics", "Spectral, Cheeger, resistance and curvature metrics");
  metrics_cmd->add_option("--in", met.in, "Input edge list")->required();
  metrics_cmd->add_option("--out", met.out, "Output path (default: stdout)");
  metrics_cmd->add_option("--format", met.format, "json or csv")->capture_default_str();
  metrics_cmd->add_flag("--norm-gap", met.norm_gap, "Normalized spectral gap");
  metrics_cmd->add_flag("--gap", met.gap, "Adjacency spectral gap mu_1 - mu_2");
  metrics_cmd->add_flag("--triangles", met.triangles, "Triangle count");
  metrics_cmd->add_flag("--cheeger-exact", met.cheeger_exact, "Exact Cheeger constant (n <= 20)");
  metrics_cmd->add_flag("--cheeger-bounds", met.cheeger_bounds, "Spectral Cheeger bounds (regular graphs)");
  metrics_cmd->add_flag("--effective-resistance", met.effective_resistance, "Per-edge effective resistance");
  metrics_cmd->add_flag("--curvature", met.curvature, "Per-edge Ollivier-Ricci curvature");
  metrics_cmd->add_flag("--kantorovich", met.kantorovich, "Kantorovich norm and graph curvature (n <= 60)");

  InfoBoundOptions info;
  auto* info_cmd = app.add_subcommand("info-bound", "Information-decay bounds for noisy circuits");
  info_cmd->add_option("--delta", info.deltas, "Gate noise level(s) in [0, 1/2]")->required();
  info_cmd->add_option("--fanin", info.fanin, "Fan-in bound k");
  info_cmd->add_option("--distance", info.distance, "Input-to-output distance d");
  info_cmd->add_option("--circuit", info.circuit, "Tree circuit JSON; emits exact MI per input");
  info_cmd->add_option("--out", info.out, "Output CSV path (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen);
    if (*rewire_cmd) return cmd_rewire(rew);
    if (*metrics_cmd) return cmd_metrics(met, out);
    if (*info_cmd) return cmd_info_bound(info, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace expander::cli
