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

#ifndef EXPANDER_RNG_H_
#define EXPANDER_RNG_H_

#include <cstdint>
#include <random>

namespace expander {

// Seeded pseudo-random stream with platform-independent draws.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The standard distributions are implementation-defined, so the
// bounded and real draws are derived here directly from raw 64-bit words:
//   uniform_index(k)  one or more words, rejection-sampled to [0, k)
//   uniform_real()    exactly one word, top 53 bits scaled to [0, 1)
// Every algorithm documents the order in which it calls these.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_word() { return engine_(); }
  std::uint64_t uniform_index(std::uint64_t bound);
  double uniform_real();

 private:
  std::mt19937_64 engine_;
};

}  // namespace expander

#endif  // EXPANDER_RNG_H_
