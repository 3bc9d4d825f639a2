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

#include "expander/trace_io.h"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace expander {

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

void write_trace_csv(std::ostream& out, const RewireTrace& trace) {
  out << kTraceCsvHeader << '\n';
  for (const TraceRecord& r : trace.records) {
    out << r.iteration << ',' << r.edge_count << ',' << (r.connected ? 1 : 0) << ','
        << format_real(r.normalized_gap) << ',' << r.triangles << ',' << (r.aborted ? 1 : 0) << '\n';
  }
}

void write_trace_metadata(std::ostream& out, const RewireTrace& trace, const std::string& input) {
  nlohmann::ordered_json meta;
  meta["algorithm"] = std::string(algorithm_name(trace.algorithm));
  meta["seed"] = trace.seed;
  meta["tau"] = trace.tau ? nlohmann::ordered_json(*trace.tau) : nlohmann::ordered_json(nullptr);
  meta["iterations"] = trace.iterations;
  meta["metric_every"] = trace.metric_every;
  meta["normalization"] = trace.normalization;
  meta["input"] = input;
  meta["records"] = trace.records.size();
  if (!trace.records.empty()) {
    const TraceRecord& last = trace.records.back();
    meta["final_norm_gap"] = last.normalized_gap;
    meta["final_connected"] = last.connected;
    meta["final_triangles"] = last.triangles;
  }
  out << meta.dump(2) << '\n';
}

}  // namespace expander
