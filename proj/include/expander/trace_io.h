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

#ifndef EXPANDER_TRACE_IO_H_
#define EXPANDER_TRACE_IO_H_

#include <iosfwd>
#include <string>

#include "expander/rewiring.h"

namespace expander {

inline constexpr const char* kTraceCsvHeader = "iter,m,connected,norm_gap,triangles,aborted";

// Formats with 9 significant digits ("%.9g").
std::string format_real(double value);

// One row per record under kTraceCsvHeader; booleans as 0/1.
void write_trace_csv(std::ostream& out, const RewireTrace& trace);

// JSON sidecar: algorithm, seed, tau (null unless G-RLEF), iterations,
// metric_every, normalization, record count, final normalized gap and the
// `input` description (generator description or source path).
void write_trace_metadata(std::ostream& out, const RewireTrace& trace, const std::string& input);

}  // namespace expander

#endif  // EXPANDER_TRACE_IO_H_
