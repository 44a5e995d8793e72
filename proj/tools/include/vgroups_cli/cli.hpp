// Copyright 2026 The vgroups Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vgroups::cli {

enum ExitStatus : int {
  kOk = 0,
  kComputationError = 1,
  kUsageError = 2,
  kFuzzMismatch = 3,
};

// Runs one command line. `args` excludes the program name. Standard input is
// read only by subcommands that consume a presentation.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

// Replays the built-in worked examples and relation checks, printing one
// PASS/FAIL line each. Returns the number of failures.
int run_regression_suite(std::ostream& out);

}  // namespace vgroups::cli
