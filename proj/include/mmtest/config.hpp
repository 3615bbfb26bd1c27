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

#ifndef MMTEST_CONFIG_HPP_
#define MMTEST_CONFIG_HPP_

// Experiment configuration and its flat `key = value` file format.
//
//   # comment
//   experiment = roc
//   N = 19
//   n = 40
//   d = 1, 5, 10, 18
//   trials = 100000
//   seed = 7
//   p_fa_grid = 0.05, 0.1, 0.2, 0.3
//
// Recognized keys: experiment, N, n, d, trials, seed, eta_grid, p_fa_grid,
// epsilon, out, pi0, pi1, include_llr, features, roc_points.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mmtest {

enum class Experiment { kFig1, kRoc, kNullStats, kAltStats, kCodelength };

std::string experiment_name(Experiment e);
// Throws kInvalidConfig for unknown names.
Experiment parse_experiment(const std::string& name);

struct ExperimentConfig {
  Experiment experiment = Experiment::kFig1;
  int alphabet_size = 20;                 // N
  std::vector<std::int64_t> sample_sizes;  // n
  std::vector<int> dimensions;            // d
  std::int64_t trials = 1;
  std::uint64_t seed = 1;
  std::vector<double> eta_grid;
  std::vector<double> p_fa_grid;
  double epsilon = 0.05;
  std::string out_path;
  // Null / source distribution; uniform over N when empty.
  std::vector<double> pi0;
  // Alternate distribution; the triangular pmf when empty.
  std::vector<double> pi1;
  // Whether log(pi1 / pi0) is the first feature (roc, altstats).
  bool include_llr = true;
  // Optional feature file replacing the random features (nullstats, altstats).
  std::string features_path;
  // Thresholds per ROC curve when eta_grid is empty.
  int roc_points = 100;

  // Throws kInvalidConfig on violated invariants (trials >= 1, N >= 2,
  // nonempty grids, ...).
  void validate() const;
  // key = value lines, in file syntax, for output metadata.
  std::vector<std::string> echo() const;
};

// Defaults of each experiment.
ExperimentConfig default_config(Experiment e);

// Parses key = value text. `experiment` selects the defaults that the file
// then overrides; `fallback` is used when the file has no experiment key.
ExperimentConfig parse_config(const std::string& text,
                              std::optional<Experiment> fallback = std::nullopt);
ExperimentConfig read_config(const std::string& path,
                             std::optional<Experiment> fallback = std::nullopt);

}  // namespace mmtest

#endif  // MMTEST_CONFIG_HPP_
