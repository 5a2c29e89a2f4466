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
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "qedsim/evolve.hpp"
#include "qedsim/measure.hpp"
#include "qedsim/model.hpp"

namespace qedsim::cli {

enum class Experiment : std::uint8_t { Lambda, Variance, OrderParameter, BenchmarkUv, GateScaling };

std::string to_string(Experiment e);
/** "lambda", "variance", "order-parameter", "benchmark-uv", "gate-scaling". */
Experiment experiment_from_string(const std::string& name);

enum class Propagator : std::uint8_t { Trotter, Exact };
enum class Estimator : std::uint8_t { Exact, Shots };

/**
 * Everything one run needs. Built from a JSON document whose dotted key
 * paths (e.g. "model.g", "plan.n_trotter") double as command-line flags.
 */
struct ExperimentConfig {
  Experiment experiment = Experiment::Lambda;
  /** omega, g, J; omega0 is set per detuning as omega + (Delta/g) g. */
  CavityParams params;
  std::size_t cavities = 2;
  /** Total time in units of T = 1/J. */
  double t_over_T = 1.0;
  int n_time_steps = 20;
  int n_trotter = 1;
  TermOrder order = TermOrder::FlipGrouped;
  Propagator propagator = Propagator::Trotter;
  std::vector<double> detunings = {1e-5, 1e5};
  /** Overlap protocol for the lambda experiment. */
  Protocol protocol = Protocol::Statevector;
  /** Expectation values (exact) or Z-basis shot estimates, for variance. */
  Estimator estimator = Estimator::Exact;
  bool identical_cavity_shortcut = false;
  std::uint64_t shots = 1024;
  int runs = 1;
  std::uint64_t seed = 1;
  /** Depolarizing probability per qubit per Trotter step (variance only). */
  double noise_p = 0.0;
  /** Worker threads; 0 means one per hardware thread. */
  int jobs = 0;
  /** CSV destination; empty or "-" writes to standard output. */
  std::string output;
  /** benchmark-uv: Trotter slices. */
  int benchmark_n_trotter = 10;
  /** gate-scaling: cavity-count range. */
  std::size_t scaling_min_cavities = 2;
  std::size_t scaling_max_cavities = 10;

  LatticeSpec lattice() const { return LatticeSpec::chain(cavities); }
  /** Propagation plan in absolute time units (total time = t_over_T / J). */
  PropagationPlan plan() const;
};

/** Invalid configuration document or override; names the offending key. */
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** The default configuration as a JSON document (every accepted key). */
nlohmann::json default_document();

/**
 * Merges `overlay` into `base`, key by key. Throws ConfigError for keys
 * that do not exist in `base` or whose value type differs.
 */
void merge_document(nlohmann::json& base, const nlohmann::json& overlay,
                    const std::string& prefix = "");

/**
 * Sets the dotted key `path` from its command-line text. The text is parsed
 * according to the type already stored at that key; arrays accept comma-
 * separated lists. Throws ConfigError for unknown keys or unparsable text.
 */
void apply_override(nlohmann::json& doc, const std::string& path, const std::string& text);

/** Converts a merged document; throws ConfigError on unknown enum names. */
ExperimentConfig config_from_document(const nlohmann::json& doc);

/** Inverse of config_from_document. */
nlohmann::json document_from_config(const ExperimentConfig& config);

struct Diagnostic {
  std::string field;
  std::string message;
};

/** Empty iff the configuration is runnable. */
std::vector<Diagnostic> validate(const ExperimentConfig& config);

}  // namespace qedsim::cli
