// Copyright 2026 The QKA Simulator Authors
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

// Command-line front end behind the `qka` tool.

#ifndef QKA_CLI_H
#define QKA_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace qka {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitAborted = 3;

/// Runs the tool on `args` (without the program name). Output goes to `out`
/// unless --out names a file; diagnostics and usage go to `err`.
int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Exhaustive group checks and dense-coding tables. "all_passed" is false if
/// any expected property fails.
nlohmann::ordered_json verify_groups_report();
std::string verify_groups_text(const nlohmann::ordered_json &report);

}  // namespace qka

#endif
