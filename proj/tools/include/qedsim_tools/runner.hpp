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

#include <cstdint>
#include <string>
#include <vector>

#include "qedsim_tools/config.hpp"

namespace qedsim::cli {

/** One CSV record; see kCsvHeader for the column meanings. */
struct Row {
  std::string experiment;
  double delta_over_g = 0.0;
  double time_over_T = 0.0;
  double value = 0.0;
  double ci = 0.0;
  std::uint64_t shots = 0;
  int n_trotter = 0;
  /** Shot-run index; -1 marks a summary over runs (mean and CI). */
  int run_index = 0;
  std::uint64_t seed = 0;
  /** Semicolon-separated annotations such as "singular" or "p=0.25". */
  std::string flags;
};

struct RunResult {
  std::vector<Row> rows;
  /** Human-readable report (benchmark-uv matrices); may be empty. */
  std::string report;
};

/**
 * Runs the configured experiment. Detunings are processed on up to
 * `config.jobs` threads; the row order and every value depend only on the
 * configuration, never on scheduling. The caller validates first.
 */
RunResult run_experiment(const ExperimentConfig& config);

}  // namespace qedsim::cli
