// Copyright 2026 The WLC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WLC_TOOLS_CLI_H_
#define WLC_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wlc {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvarianceFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitSearchFailure = 4;

struct RunConfig {
  std::string command;
  double eps = 1e-12;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int depth = 8;
  std::string output;  // empty: standard output
  std::string format = "csv";
};

// Runs the command line (args[0] is the program name). Results go to `out`
// unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wlc

#endif  // WLC_TOOLS_CLI_H_
