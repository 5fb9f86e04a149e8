// Copyright 2026 The qpartsep Authors
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

#ifndef QPARTSEP_TOOLS_COMMANDS_HPP
#define QPARTSEP_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qpartsep::cli {

/// Runs one CLI invocation. `args` excludes the program name; `in` backs the
/// '-' stdin placeholder. Exit codes: 0 success (verdicts are results, not
/// errors), 2 malformed input file, 3 validation failure, 4 bad partition
/// syntax or partition/qubit-count mismatch, 1 anything else.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace qpartsep::cli

#endif  // QPARTSEP_TOOLS_COMMANDS_HPP
