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

#ifndef MMTEST_EXPERIMENTS_HPP_
#define MMTEST_EXPERIMENTS_HPP_

// Seeded Monte Carlo experiments. Every experiment is a pure function of its
// configuration: trial t of sample-size block b under hypothesis h draws from
// RandomStream(seed, trial_stream_index(h, b, t)), and random features come
// from RandomStream(seed, 0).

#include <cstdint>
#include <span>
#include <vector>

#include "mmtest/alphabet.hpp"
#include "mmtest/config.hpp"
#include "mmtest/function_class.hpp"
#include "mmtest/random_stream.hpp"
#include "mmtest/result_table.hpp"
#include "mmtest/trial_runner.hpp"

namespace mmtest {

enum class Hypothesis : std::uint64_t { kNull = 0, kAlternate = 1 };

constexpr std::uint64_t trial_stream_index(Hypothesis h, std::uint64_t block,
                                           std::uint64_t trial) {
  return (static_cast<std::uint64_t>(h) << 60) | (block << 40) | (trial + 1);
}

// pmf of the sum of two independent uniforms on m = (N+1)/2 points:
// (m - |k - (m-1)|) / m^2 for k = 0..N-1. Throws kEvenAlphabet.
Distribution triangular_distribution(int alphabet_size);

// `count` features with independent standard normal values per symbol,
// centered under pi0. A draw that would make {1, existing..., new...}
// linearly dependent over the support of pi0 is redrawn.
std::vector<RealFunction> random_features(std::size_t count,
                                          const Distribution& pi0,
                                          const std::vector<RealFunction>& existing,
                                          RandomStream& stream);

// log(pi1 / pi0); both must have full support.
RealFunction log_likelihood_ratio(const Distribution& pi1, const Distribution& pi0);

// Two-sided Kolmogorov-Smirnov distance between the sample and chi^2_dof.
double ks_distance_chi_squared(std::vector<double> sample, int dof);

// Linear interpolation of the empirical ROC at false-alarm level p_fa.
// Tests reject when statistic >= threshold.
double detection_at_false_alarm(std::span<const double> null_stats,
                                std::span<const double> alt_stats, double p_fa);

// Per-trial statistics behind the ROC experiment. Column 0 is the Hoeffding
// statistic and column 1 + k the mismatched statistic for dimensions[k].
struct RocStatistics {
  std::vector<int> dimensions;
  std::int64_t trials = 0;
  std::size_t width = 0;
  std::vector<double> null_stats;  // trials x width
  std::vector<double> alt_stats;
  std::int64_t nonconverged = 0;

  std::vector<double> column(const std::vector<double>& stats, std::size_t c) const;
};

RocStatistics roc_statistics(const ExperimentConfig& config,
                             Execution exec = Execution::kParallel);

struct RocReport {
  // (hoeffding, d, eta, p_fa, p_d) over the threshold sweep.
  ResultTable curve;
  // (hoeffding, d, p_fa, p_d, p_d_se) at the configured p_fa grid.
  ResultTable operating_points;
  // max |mismatched - Hoeffding| per trial for d = N - 1, or -1 when
  // N - 1 is not among the dimensions.
  double full_rank_max_gap = -1.0;
};

RocReport roc_report(const ExperimentConfig& config,
                     Execution exec = Execution::kParallel);

// (n, eta, p_fa_mc, p_fa_chisq, p_fa_sanov, trials)
ResultTable run_fig1(const ExperimentConfig& config,
                     Execution exec = Execution::kParallel);
// The threshold sweep of roc_report.
ResultTable run_roc(const ExperimentConfig& config,
                    Execution exec = Execution::kParallel);
// (hoeffding, n, d, mean_nD, var_nD, ks_dist, nonconverged, trials)
ResultTable run_null_stats(const ExperimentConfig& config,
                           Execution exec = Execution::kParallel);
// (n, d, base_value, bias_mc, bias_se, bias_pred, var_mc, var_pred,
//  nonconverged, trials)
ResultTable run_alt_stats(const ExperimentConfig& config,
                          Execution exec = Execution::kParallel);
// (n, mean_n_excess, var_n_excess, fallback_rate, trials)
ResultTable run_codelength(const ExperimentConfig& config,
                           Execution exec = Execution::kParallel);

ResultTable run_experiment(const ExperimentConfig& config,
                           Execution exec = Execution::kParallel);

}  // namespace mmtest

#endif  // MMTEST_EXPERIMENTS_HPP_
