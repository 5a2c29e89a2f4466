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

#include "qedsim_tools/csv.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <ostream>

namespace qedsim::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_row(const Row& row) {
  std::string line = row.experiment;
  line += ',' + format_number(row.delta_over_g);
  line += ',' + format_number(row.time_over_T);
  line += ',' + format_number(row.value);
  line += ',' + format_number(row.ci);
  line += ',' + std::to_string(row.shots);
  line += ',' + std::to_string(row.n_trotter);
  line += ',' + std::to_string(row.run_index);
  line += ',' + std::to_string(row.seed);
  line += ',' + row.flags;
  return line;
}

std::string csv_body(const std::vector<Row>& rows) {
  std::string body(kCsvHeader);
  body += '\n';
  for (const Row& row : rows) {
    body += format_row(row);
    body += '\n';
  }
  return body;
}

std::string csv_preamble(const ExperimentConfig& config) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  std::string out = "# qedsim " + to_string(config.experiment) + " created " + stamp + '\n';
  out += "# config " + document_from_config(config).dump() + '\n';
  return out;
}

void write_csv(std::ostream& out, const ExperimentConfig& config, const std::vector<Row>& rows) {
  out << csv_preamble(config) << csv_body(rows);
}

}  // namespace qedsim::cli
