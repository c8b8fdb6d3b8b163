// Copyright 2026 The Netstrata Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETSTRATA_TOOLS_CLI_H_
#define NETSTRATA_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace netstrata::cli {

// Process exit codes. A command returns the most severe outcome it saw.
enum ExitStatus : int {
  kSuccess = 0,
  kViolations = 1,
  kUsageError = 2,
};

// Runs one netstrata command. `args` excludes the program name. Data goes to
// `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace netstrata::cli

#endif  // NETSTRATA_TOOLS_CLI_H_
