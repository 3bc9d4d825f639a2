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

#include "expander/edge_list.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "expander/errors.h"

namespace expander {

namespace {

bool is_skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Parses exactly two integers from `line`; anything else is an error.
void parse_pair(const std::string& line, int line_no, long long& a, long long& b) {
  std::istringstream fields(line);
  std::string extra;
  if (!(fields >> a >> b)) throw ParseError("expected two integers", line_no);
  if (fields >> extra) throw ParseError("unexpected trailing field '" + extra + "'", line_no);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    parse_pair(line, line_no, n, m);
    break;
  }
  if (n < 0) throw ParseError("missing header line \"n m\"", line_no);
  if (n > (1LL << 30) || m < 0) throw ParseError("header values out of range", line_no);

  Graph g(static_cast<int>(n));
  long long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    long long u = 0;
    long long v = 0;
    parse_pair(line, line_no, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("node index out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    if (g.has_edge(static_cast<Node>(u), static_cast<Node>(v))) {
      throw ParseError("duplicate edge", line_no);
    }
    if (seen == m) throw ParseError("more edges than the header declares", line_no);
    g.add_edge(static_cast<Node>(u), static_cast<Node>(v));
    ++seen;
  }
  if (seen != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(seen) + " were read",
                     line_no);
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string to_edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace expander
