// Copyright 2026 The fairnb Authors
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

#ifndef FAIRNB_TOOLS_CLI_H_
#define FAIRNB_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace fairnb::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnfair = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIngestion = 3;
inline constexpr int kExitSolver = 4;

// Runs one subcommand. Results go to `out` (or the --out file), errors to
// `err` as a single JSON line.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fairnb::cli

#endif  // FAIRNB_TOOLS_CLI_H_
