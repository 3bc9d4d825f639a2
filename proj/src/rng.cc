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

#include "expander/rng.h"

#include "expander/errors.h"

namespace expander {

std::uint64_t RngStream::uniform_index(std::uint64_t bound) {
  if (bound == 0) {
    throw ParameterError("uniform_index bound must be positive");
  }
  // Largest multiple of `bound` representable; words above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t word = engine_();
  while (word > limit) word = engine_();
  return word % bound;
}

double RngStream::uniform_real() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace expander
