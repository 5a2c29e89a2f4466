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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qedsim_tools/config.hpp"
#include "qedsim_tools/runner.hpp"

namespace qedsim::cli {

/** Column names of every CSV file the tools write, in order. */
inline constexpr std::string_view kCsvHeader =
    "experiment,delta_over_g,time_over_T,value,ci,shots,n_trotter,run_index,seed,flags";

/** "%.12g", with "inf", "-inf" and "nan" for non-finite values. */
std::string format_number(double v);

/** One CSV line without the trailing newline. */
std::string format_row(const Row& row);

/** Header line followed by one line per row. Deterministic for equal rows. */
std::string csv_body(const std::vector<Row>& rows);

/**
 * Comment lines (starting with '#') recording the creation time and the
 * configuration as JSON. They precede the body and are the only part of a
 * file that differs between identical runs.
 */
std::string csv_preamble(const ExperimentConfig& config);

void write_csv(std::ostream& out, const ExperimentConfig& config, const std::vector<Row>& rows);

}  // namespace qedsim::cli
