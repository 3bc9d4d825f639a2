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

#ifndef EXPANDER_EDGE_LIST_H_
#define EXPANDER_EDGE_LIST_H_

#include <iosfwd>
#include <string>

#include "expander/graph.h"

namespace expander {

// Edge-list text format:
//   line 1        "n m"
//   next m lines  "u v", 0-indexed, whitespace-separated
// Lines starting with '#' are skipped anywhere in the file. The writer emits
// u < v in ascending order and a trailing newline, so write(read(f)) == f for
// canonical files. The reader accepts either endpoint order but rejects
// self-loops, duplicates, out-of-range nodes and a wrong edge count, reporting
// the offending line via ParseError.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

std::string to_edge_list_string(const Graph& g);

}  // namespace expander

#endif  // EXPANDER_EDGE_LIST_H_
