// Copyright 2026 The regunify Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REGUNIFY_CLI_H_
#define REGUNIFY_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace regunify {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitSolved = 0,
  kExitFalse = 1,
  kExitWrong = 2,
  kExitUnknown = 3,
  kExitUsage = 64,
  kExitInput = 65,
  kExitInternal = 70,
};

// Runs the tool on args, which exclude the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace regunify

#endif  // REGUNIFY_CLI_H_
