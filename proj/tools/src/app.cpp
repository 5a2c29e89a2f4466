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

#include "qedsim_tools/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>

#include "qedsim/errors.hpp"
#include "qedsim_tools/config.hpp"
#include "qedsim_tools/csv.hpp"
#include "qedsim_tools/runner.hpp"

namespace qedsim::cli {

namespace {

using nlohmann::json;

/** Named flags shared by every subcommand; unset ones leave the document alone. */
struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> shots;
  std::optional<int> runs;
  std::optional<int> jobs;
  std::optional<std::string> output;
  bool dump_config = false;
};

void add_common_flags(CLI::App& sub, CommonFlags& flags) {
  sub.add_option("--config", flags.config_path, "JSON configuration file (keys as in --dump-config)")
      ->check(CLI::ExistingFile);
  sub.add_option("--seed", flags.seed, "base seed for every random stream");
  sub.add_option("--shots", flags.shots, "measurement shots per estimate");
  sub.add_option("--runs", flags.runs, "independent shot runs (noise realizations when noise.p > 0)");
  sub.add_option("--jobs", flags.jobs, "worker threads; 0 uses every hardware thread");
  sub.add_option("-o,--output", flags.output, "CSV destination; '-' or empty writes to standard output");
  sub.add_flag("--dump-config", flags.dump_config, "print the merged configuration as JSON and exit");
  sub.allow_extras();
  sub.footer(
      "Any configuration key can also be set with a dotted flag, e.g.\n"
      "  --model.g 0.2  --plan.n_trotter=4  --detunings 1e-5,1,1e5  --noise.p 0.5");
}

/** Applies leftover "--key value" / "--key=value" arguments as dotted overrides. */
void apply_extras(json& doc, const std::vector<std::string>& extras) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& arg = extras[i];
    if (arg.rfind("--", 0) != 0 || arg.size() == 2) {
      throw ConfigError("unexpected argument '" + arg + "'");
    }
    std::string key = arg.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else if (i + 1 < extras.size()) {
      value = extras[++i];
    } else {
      throw ConfigError(key + ": missing value");
    }
    apply_override(doc, key, value);
  }
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

ExperimentConfig build_config(Experiment experiment, const CommonFlags& flags,
                              const std::vector<std::string>& extras) {
  json doc = default_document();
  if (!flags.config_path.empty()) merge_document(doc, load_document(flags.config_path));
  apply_extras(doc, extras);
  doc["experiment"] = to_string(experiment);
  if (flags.seed) doc["seed"] = *flags.seed;
  if (flags.shots) doc["shots"] = *flags.shots;
  if (flags.runs) doc["runs"] = *flags.runs;
  if (flags.jobs) doc["jobs"] = *flags.jobs;
  if (flags.output) doc["output"] = *flags.output;
  return config_from_document(doc);
}

int execute(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  const RunResult result = run_experiment(config);
  const bool to_stdout = config.output.empty() || config.output == "-";
  if (to_stdout) {
    write_csv(out, config, result.rows);
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.output << "'\n";
      return kExitFailure;
    }
    write_csv(file, config, result.rows);
  }
  if (!result.report.empty()) (to_stdout ? err : out) << result.report;
  return kExitOk;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) {
    return kExitConfig;
  }
  if (dynamic_cast<const NumericalError*>(&e)) return kExitNumerical;
  return kExitFailure;
}

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum simulation of coupled-cavity (Jaynes-Cummings-Hubbard) dynamics", "qedsim"};
  app.require_subcommand(1);
  CommonFlags flags;
  const std::vector<std::pair<Experiment, const char*>> commands = {
      {Experiment::Lambda, "Loschmidt rate Lambda(t) for each detuning"},
      {Experiment::Variance, "polariton-number variance trajectory for each detuning"},
      {Experiment::OrderParameter, "time-averaged variance (order parameter) for each detuning"},
      {Experiment::BenchmarkUv, "two-level-atom / spin-3/2 benchmark matrices U and V"},
      {Experiment::GateScaling, "CNOT count of one Trotter step versus chain length"},
  };
  std::vector<std::pair<Experiment, CLI::App*>> subs;
  for (const auto& [experiment, description] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(experiment), description);
    add_common_flags(*sub, flags);
    subs.emplace_back(experiment, sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (const auto& [experiment, sub] : subs) {
      if (!sub->parsed()) continue;
      const ExperimentConfig config = build_config(experiment, flags, sub->remaining());
      if (flags.dump_config) {
        out << document_from_config(config).dump(2) << '\n';
        return kExitOk;
      }
      const std::vector<Diagnostic> diagnostics = validate(config);
      for (const Diagnostic& d : diagnostics) err << "error: " << d.field << ": " << d.message << '\n';
      if (!diagnostics.empty()) return kExitConfig;
      return execute(config, out, err);
    }
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    err << (code == kExitNumerical ? "numerical error: " : "error: ") << e.what() << '\n';
    return code;
  }
  return kExitFailure;
}

}  // namespace qedsim::cli
