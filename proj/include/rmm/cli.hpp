// Copyright 2026 The rmmatch Authors
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

#ifndef RMM_CLI_HPP_
#define RMM_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rmm::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kOk = 0,
  kValidationError = 1,  // bad usage, bad documents, violated preconditions
  kResourceExhausted = 2,
  kIoError = 3,
};

/// Runs one tool invocation. `args` excludes the program name, e.g.
/// {"stability", "fixtures/example1.json"}. Reports go to `out` (or to the
/// path named by --out); diagnostics go to `err`. Identical args plus
/// identical input bytes produce identical output bytes.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rmm::cli

#endif  // RMM_CLI_HPP_
