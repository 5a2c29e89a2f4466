// Copyright 2026 The qedsim Authors
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

#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace qedsim::cli {

/** Process exit codes of the qedsim tool. */
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitNumerical = 3,
};

/**
 * Exit code for an exception escaping an experiment: ConfigError and
 * std::invalid_argument map to kExitConfig, NumericalError to
 * kExitNumerical, anything else to kExitFailure.
 */
int exit_code_for(const std::exception& e);

/**
 * Parses the command line (including the subcommand), runs the experiment
 * and writes the CSV. Diagnostics go to `err`; the CSV goes to the
 * configured file or, when none is set, to `out`. Never throws.
 */
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qedsim::cli
