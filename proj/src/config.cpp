// Copyright 2026 The mmtest Authors
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

#include "mmtest/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "mmtest/error.hpp"

namespace mmtest {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw Error(ErrorCode::kInvalidConfig,
              "bad value '" + value + "' for key '" + key + "'");
}

template <typename T>
T parse_scalar(const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  T out{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || res.ec != std::errc() ||
      res.ptr != value.data() + value.size()) {
    bad_value(key, value);
  }
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& value) {
  std::vector<T> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_scalar<T>(key, item));
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  bad_value(key, value);
}

// Shortest round-trip text.
template <typename T>
std::string format_value(T v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_value(values[i]);
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidConfig, message);
}

}  // namespace

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::kFig1: return "fig1";
    case Experiment::kRoc: return "roc";
    case Experiment::kNullStats: return "nullstats";
    case Experiment::kAltStats: return "altstats";
    case Experiment::kCodelength: return "codelength";
  }
  return "unknown";
}

Experiment parse_experiment(const std::string& name) {
  for (Experiment e : {Experiment::kFig1, Experiment::kRoc, Experiment::kNullStats,
                       Experiment::kAltStats, Experiment::kCodelength}) {
    if (experiment_name(e) == name) return e;
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown experiment '" + name + "'");
}

ExperimentConfig default_config(Experiment e) {
  ExperimentConfig c;
  c.experiment = e;
  switch (e) {
    case Experiment::kFig1:
      c.alphabet_size = 20;
      c.sample_sizes = {1000};
      c.trials = 1000000;
      break;
    case Experiment::kRoc:
      c.alphabet_size = 19;
      c.sample_sizes = {40};
      c.dimensions = {1, 5, 10, 18};
      c.trials = 100000;
      c.p_fa_grid = {0.05, 0.1, 0.2, 0.3};
      break;
    case Experiment::kNullStats:
      c.alphabet_size = 8;
      c.sample_sizes = {2000};
      c.dimensions = {3};
      c.trials = 100000;
      break;
    case Experiment::kAltStats:
      c.alphabet_size = 5;
      c.sample_sizes = {5000};
      c.dimensions = {1};
      c.trials = 200000;
      break;
    case Experiment::kCodelength:
      c.alphabet_size = 6;
      c.sample_sizes = {4000};
      c.trials = 100000;
      c.epsilon = 0.05;
      break;
  }
  return c;
}

void ExperimentConfig::validate() const {
  require(trials >= 1, "trials must be >= 1");
  require(alphabet_size >= 2, "N must be >= 2");
  require(!sample_sizes.empty(), "n must list at least one sample size");
  for (auto n : sample_sizes) require(n >= 1, "sample sizes must be >= 1");
  if (experiment == Experiment::kRoc || experiment == Experiment::kNullStats ||
      experiment == Experiment::kAltStats) {
    require(!dimensions.empty(), "d must list at least one dimension");
    for (int d : dimensions) {
      require(d >= 1 && d <= alphabet_size - 1, "each d must lie in [1, N-1]");
    }
  }
  for (double p : p_fa_grid) require(p > 0.0 && p < 1.0, "p_fa values must lie in (0, 1)");
  for (double eta : eta_grid) require(eta >= 0.0, "eta values must be >= 0");
  if (experiment == Experiment::kRoc) {
    require(!p_fa_grid.empty(), "roc needs a nonempty p_fa_grid");
    require(roc_points >= 2, "roc_points must be >= 2");
  }
  if (experiment == Experiment::kCodelength) {
    require(epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
  }
  require(pi0.empty() || static_cast<int>(pi0.size()) == alphabet_size,
          "pi0 must have N entries");
  require(pi1.empty() || static_cast<int>(pi1.size()) == alphabet_size,
          "pi1 must have N entries");
}

std::vector<std::string> ExperimentConfig::echo() const {
  std::vector<std::string> out;
  out.push_back("experiment = " + experiment_name(experiment));
  out.push_back("N = " + std::to_string(alphabet_size));
  out.push_back("n = " + join(sample_sizes));
  if (!dimensions.empty()) out.push_back("d = " + join(dimensions));
  out.push_back("trials = " + std::to_string(trials));
  out.push_back("seed = " + std::to_string(seed));
  if (!eta_grid.empty()) out.push_back("eta_grid = " + join(eta_grid));
  if (!p_fa_grid.empty()) out.push_back("p_fa_grid = " + join(p_fa_grid));
  if (experiment == Experiment::kCodelength) out.push_back("epsilon = " + format_value(epsilon));
  if (!pi0.empty()) out.push_back("pi0 = " + join(pi0));
  if (!pi1.empty()) out.push_back("pi1 = " + join(pi1));
  if (experiment == Experiment::kRoc || experiment == Experiment::kAltStats) {
    out.push_back(std::string("include_llr = ") + (include_llr ? "true" : "false"));
  }
  if (!features_path.empty()) out.push_back("features = " + features_path);
  if (experiment == Experiment::kRoc) out.push_back("roc_points = " + std::to_string(roc_points));
  return out;
}

ExperimentConfig parse_config(const std::string& text,
                              std::optional<Experiment> fallback) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (!entries.emplace(key, trim(line.substr(eq + 1))).second) {
      throw Error(ErrorCode::kInvalidConfig, "duplicate key '" + key + "'");
    }
  }

  Experiment e;
  if (auto it = entries.find("experiment"); it != entries.end()) {
    e = parse_experiment(it->second);
    if (fallback && *fallback != e) {
      throw Error(ErrorCode::kInvalidConfig,
                  "config is for '" + it->second + "', not '" +
                      experiment_name(*fallback) + "'");
    }
  } else if (fallback) {
    e = *fallback;
  } else {
    throw Error(ErrorCode::kInvalidConfig, "missing experiment key");
  }
  ExperimentConfig c = default_config(e);

  for (const auto& [key, value] : entries) {
    if (key == "experiment") continue;
    if (key == "N") c.alphabet_size = parse_scalar<int>(key, value);
    else if (key == "n") c.sample_sizes = parse_list<std::int64_t>(key, value);
    else if (key == "d") c.dimensions = parse_list<int>(key, value);
    else if (key == "trials") c.trials = parse_scalar<std::int64_t>(key, value);
    else if (key == "seed") c.seed = parse_scalar<std::uint64_t>(key, value);
    else if (key == "eta_grid") c.eta_grid = parse_list<double>(key, value);
    else if (key == "p_fa_grid") c.p_fa_grid = parse_list<double>(key, value);
    else if (key == "epsilon") c.epsilon = parse_scalar<double>(key, value);
    else if (key == "out") c.out_path = value;
    else if (key == "pi0") c.pi0 = parse_list<double>(key, value);
    else if (key == "pi1") c.pi1 = parse_list<double>(key, value);
    else if (key == "include_llr") c.include_llr = parse_bool(key, value);
    else if (key == "features") c.features_path = value;
    else if (key == "roc_points") c.roc_points = parse_scalar<int>(key, value);
    else throw Error(ErrorCode::kInvalidConfig, "unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

ExperimentConfig read_config(const std::string& path,
                             std::optional<Experiment> fallback) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), fallback);
}

}  // namespace mmtest
