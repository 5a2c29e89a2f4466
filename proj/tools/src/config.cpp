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

#include "qedsim_tools/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace qedsim::cli {

namespace {

using nlohmann::json;

std::string order_name(TermOrder order) {
  switch (order) {
    case TermOrder::Lexicographic: return "lexicographic";
    case TermOrder::DiagonalFirst: return "diagonal-first";
    case TermOrder::FlipGrouped: return "flip-grouped";
  }
  return "?";
}

TermOrder order_from_name(const std::string& name) {
  if (name == "lexicographic") return TermOrder::Lexicographic;
  if (name == "diagonal-first") return TermOrder::DiagonalFirst;
  if (name == "flip-grouped") return TermOrder::FlipGrouped;
  throw ConfigError("plan.order: unknown ordering '" + name +
                    "' (expected lexicographic, diagonal-first or flip-grouped)");
}

std::string propagator_name(Propagator p) { return p == Propagator::Exact ? "exact" : "trotter"; }

Propagator propagator_from_name(const std::string& name) {
  if (name == "trotter") return Propagator::Trotter;
  if (name == "exact") return Propagator::Exact;
  throw ConfigError("plan.propagator: unknown propagator '" + name + "' (expected trotter or exact)");
}

std::string estimator_name(Estimator e) { return e == Estimator::Shots ? "shots" : "exact"; }

Estimator estimator_from_name(const std::string& name) {
  if (name == "exact") return Estimator::Exact;
  if (name == "shots") return Estimator::Shots;
  throw ConfigError("estimator: unknown estimator '" + name + "' (expected exact or shots)");
}

bool same_kind(const json& a, const json& b) {
  if (a.is_number() && b.is_number()) {
    // Integers must stay integral; floats accept any number.
    return a.is_number_float() || !b.is_number_float();
  }
  return a.type() == b.type();
}

double parse_double(const std::string& path, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError(path + ": expected a number, got '" + text + "'");
  }
  return v;
}

std::int64_t parse_integer(const std::string& path, const std::string& text) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ConfigError(path + ": expected an integer, got '" + text + "'");
  }
  return v;
}

json parse_like(const json& like, const std::string& path, const std::string& text) {
  if (like.is_boolean()) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ConfigError(path + ": expected true or false, got '" + text + "'");
  }
  if (like.is_number_unsigned() || like.is_number_integer()) return parse_integer(path, text);
  if (like.is_number_float()) return parse_double(path, text);
  if (like.is_string()) return text;
  if (like.is_array()) {
    json out = json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(parse_double(path, item));
    }
    return out;
  }
  throw ConfigError(path + ": cannot be set from the command line");
}

template <class T>
T get(const json& doc, const char* key) {
  return doc.at(key).get<T>();
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::Lambda: return "lambda";
    case Experiment::Variance: return "variance";
    case Experiment::OrderParameter: return "order-parameter";
    case Experiment::BenchmarkUv: return "benchmark-uv";
    case Experiment::GateScaling: return "gate-scaling";
  }
  return "?";
}

Experiment experiment_from_string(const std::string& name) {
  for (Experiment e : {Experiment::Lambda, Experiment::Variance, Experiment::OrderParameter,
                       Experiment::BenchmarkUv, Experiment::GateScaling}) {
    if (to_string(e) == name) return e;
  }
  throw ConfigError("experiment: unknown experiment '" + name + "'");
}

PropagationPlan ExperimentConfig::plan() const {
  PropagationPlan p;
  p.total_time = t_over_T / params.J;
  p.n_time_steps = n_time_steps;
  p.n_trotter = n_trotter;
  p.order = order;
  return p;
}

json default_document() { return document_from_config(ExperimentConfig{}); }

void merge_document(json& base, const json& overlay, const std::string& prefix) {
  if (!overlay.is_object()) throw ConfigError((prefix.empty() ? "config" : prefix) + ": expected an object");
  for (const auto& [key, value] : overlay.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (!base.contains(key)) throw ConfigError(path + ": unknown configuration key");
    json& slot = base[key];
    if (slot.is_object()) {
      merge_document(slot, value, path);
    } else if (!same_kind(slot, value)) {
      throw ConfigError(path + ": expected a value of type " + std::string(slot.type_name()) +
                        ", got " + value.type_name());
    } else if (slot.is_array()) {
      for (const auto& v : value) {
        if (!v.is_number()) throw ConfigError(path + ": expected a list of numbers");
      }
      slot = value;
    } else {
      slot = value;
    }
  }
}

void apply_override(json& doc, const std::string& path, const std::string& text) {
  json* node = &doc;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (!node->is_object() || !node->contains(part)) {
      throw ConfigError(path + ": unknown configuration key");
    }
    node = &(*node)[part];
  }
  if (node->is_object()) throw ConfigError(path + ": names a section, not a value");
  *node = parse_like(*node, path, text);
}

ExperimentConfig config_from_document(const json& doc) {
  ExperimentConfig c;
  try {
    c.experiment = experiment_from_string(get<std::string>(doc, "experiment"));
    const json& model = doc.at("model");
    c.params.omega = get<double>(model, "omega");
    c.params.g = get<double>(model, "g");
    c.params.J = get<double>(model, "J");
    c.params.omega0 = c.params.omega;
    c.cavities = get<std::size_t>(doc.at("lattice"), "L");
    const json& plan = doc.at("plan");
    c.t_over_T = get<double>(plan, "t_over_T");
    c.n_time_steps = get<int>(plan, "n_time_steps");
    c.n_trotter = get<int>(plan, "n_trotter");
    c.order = order_from_name(get<std::string>(plan, "order"));
    c.propagator = propagator_from_name(get<std::string>(plan, "propagator"));
    c.detunings = get<std::vector<double>>(doc, "detunings");
    try {
      c.protocol = protocol_from_string(get<std::string>(doc, "protocol"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("protocol: ") + e.what());
    }
    c.estimator = estimator_from_name(get<std::string>(doc, "estimator"));
    c.identical_cavity_shortcut = get<bool>(doc, "identical_cavity_shortcut");
    c.shots = get<std::uint64_t>(doc, "shots");
    c.runs = get<int>(doc, "runs");
    c.seed = get<std::uint64_t>(doc, "seed");
    c.noise_p = get<double>(doc.at("noise"), "p");
    c.jobs = get<int>(doc, "jobs");
    c.output = get<std::string>(doc, "output");
    c.benchmark_n_trotter = get<int>(doc.at("benchmark"), "n_trotter");
    c.scaling_min_cavities = get<std::size_t>(doc.at("gate_scaling"), "L_min");
    c.scaling_max_cavities = get<std::size_t>(doc.at("gate_scaling"), "L_max");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
  return c;
}

json document_from_config(const ExperimentConfig& c) {
  return json{
      {"experiment", to_string(c.experiment)},
      {"model", {{"omega", c.params.omega}, {"g", c.params.g}, {"J", c.params.J}}},
      {"lattice", {{"L", c.cavities}}},
      {"plan",
       {{"t_over_T", c.t_over_T},
        {"n_time_steps", c.n_time_steps},
        {"n_trotter", c.n_trotter},
        {"order", order_name(c.order)},
        {"propagator", propagator_name(c.propagator)}}},
      {"detunings", c.detunings},
      {"protocol", to_string(c.protocol)},
      {"estimator", estimator_name(c.estimator)},
      {"identical_cavity_shortcut", c.identical_cavity_shortcut},
      {"shots", c.shots},
      {"runs", c.runs},
      {"seed", c.seed},
      {"noise", {{"p", c.noise_p}}},
      {"jobs", c.jobs},
      {"output", c.output},
      {"benchmark", {{"n_trotter", c.benchmark_n_trotter}}},
      {"gate_scaling", {{"L_min", c.scaling_min_cavities}, {"L_max", c.scaling_max_cavities}}},
  };
}

std::vector<Diagnostic> validate(const ExperimentConfig& c) {
  std::vector<Diagnostic> out;
  auto fail = [&](const char* field, const std::string& message) { out.push_back({field, message}); };
  const bool simulates = c.experiment == Experiment::Lambda || c.experiment == Experiment::Variance ||
                         c.experiment == Experiment::OrderParameter;

  if (!(c.params.omega > 0.0) || !std::isfinite(c.params.omega)) fail("model.omega", "must be positive");
  if (!(c.params.g > 0.0) || !std::isfinite(c.params.g)) fail("model.g", "must be positive");
  if (!(c.params.J > 0.0) || !std::isfinite(c.params.J)) {
    fail("model.J", "must be positive (it sets the time unit T = 1/J)");
  }
  if (c.jobs < 0) fail("jobs", "must be >= 0 (0 uses every hardware thread)");

  if (simulates) {
    if (c.cavities < 1) fail("lattice.L", "must be at least 1");
    if (3 * c.cavities > 24) fail("lattice.L", "at most 8 cavities (24 qubits) can be simulated");
    if (c.propagator == Propagator::Exact && 3 * c.cavities > kMaxDenseQubits) {
      fail("plan.propagator", "exact propagation supports at most 4 cavities");
    }
    if (!(c.t_over_T > 0.0) || !std::isfinite(c.t_over_T)) fail("plan.t_over_T", "must be positive");
    if (c.n_time_steps < 1) fail("plan.n_time_steps", "must be at least 1");
    if (c.n_trotter < 1) fail("plan.n_trotter", "must be at least 1");
    if (c.detunings.empty()) fail("detunings", "needs at least one value");
    for (double d : c.detunings) {
      if (!(d > 0.0) || !std::isfinite(d)) {
        fail("detunings", "every Delta/g must be positive and finite");
        break;
      }
    }
    if (c.runs < 1) fail("runs", "must be at least 1");
    if (!(c.noise_p >= 0.0 && c.noise_p <= 1.0)) fail("noise.p", "must lie in [0, 1]");
  }

  if (c.experiment == Experiment::Lambda) {
    if (c.protocol != Protocol::Statevector && c.shots < 1) {
      fail("shots", "must be at least 1 for the " + to_string(c.protocol) + " protocol");
    }
    if (c.protocol == Protocol::Csp && 6 * c.cavities + 1 > 25) {
      fail("protocol", "the swap test needs 6L + 1 qubits; at most 4 cavities are supported");
    }
    if (c.noise_p > 0.0) fail("noise.p", "noise applies to the variance experiments only");
  }
  if (c.experiment == Experiment::Variance || c.experiment == Experiment::OrderParameter) {
    if (c.estimator == Estimator::Shots && c.shots < 1) {
      fail("shots", "must be at least 1 for shot estimation");
    }
    if (c.noise_p > 0.0) {
      if (c.estimator != Estimator::Shots) fail("estimator", "noise requires estimator = shots");
      if (c.runs < 2) fail("runs", "noise needs at least 2 realizations");
      if (c.propagator != Propagator::Trotter) {
        fail("plan.propagator", "noise is applied per Trotter step; use trotter");
      }
    }
    if (c.identical_cavity_shortcut && c.cavities > 2) {
      fail("identical_cavity_shortcut", "cavities of a chain longer than 2 are not equivalent");
    }
  }
  if (c.experiment == Experiment::BenchmarkUv && c.benchmark_n_trotter < 1) {
    fail("benchmark.n_trotter", "must be at least 1");
  }
  if (c.experiment == Experiment::GateScaling) {
    if (c.scaling_min_cavities < 1) fail("gate_scaling.L_min", "must be at least 1");
    if (c.scaling_max_cavities < c.scaling_min_cavities) {
      fail("gate_scaling.L_max", "must not be below gate_scaling.L_min");
    }
    if (3 * c.scaling_max_cavities > kMaxQubits) fail("gate_scaling.L_max", "at most 20 cavities");
  }
  return out;
}

}  // namespace qedsim::cli
