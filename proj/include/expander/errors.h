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

#ifndef EXPANDER_ERRORS_H_
#define EXPANDER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace expander {

// Bad argument values (out-of-range probabilities, family parameters, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well-formed but the operation is undefined on it, e.g. a
// spectrum of a disconnected graph or the curvature of a non-edge.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact routine asked to run beyond the size it can enumerate.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Randomized generator exhausted its retry budget.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace expander

#endif  // EXPANDER_ERRORS_H_
