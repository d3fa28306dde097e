// Copyright 2026 The opcost Authors
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

// Command dispatch for the command-line tool. Each command reads validated
// settings from a KeyValueConfig and writes tables to an output stream.

#ifndef OPCOST_COMMANDS_H_
#define OPCOST_COMMANDS_H_

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "opcost/config.h"
#include "opcost/problems.h"

namespace opcost {

// Names accepted by RunCommand.
const std::vector<std::string>& CommandNames();

// Settings accepted by `command`.
const std::set<std::string>& AllowedKeys(const std::string& command);

// Builds the decision problem from "problem" and its companion keys.
OpCostProblem ProblemFromConfig(const KeyValueConfig& config);

// Inverse of ProblemFromConfig.
void ProblemToConfig(const OpCostProblem& problem, KeyValueConfig& config);

// Runs `command`. Relative data paths resolve against `base_dir`. Returns the
// process exit status: 0 when nothing reported an error.
int RunCommand(const std::string& command, const KeyValueConfig& config,
               const std::string& base_dir, std::ostream& out, std::ostream& err);

}  // namespace opcost

#endif  // OPCOST_COMMANDS_H_
