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

#ifndef EXPANDER_CLI_H_
#define EXPANDER_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace expander::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kIo = 4,
};

// Runs the command line `args` (args[0] is the program name). Normal output
// goes to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "t.csv" + 7 -> "t.seed7.csv"; the suffix goes before the last extension.
std::string with_seed_suffix(const std::string& path, unsigned long long seed);

}  // namespace expander::cli

#endif  // EXPANDER_CLI_H_
