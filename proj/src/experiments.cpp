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

#include "mmtest/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "mmtest/asymptotics.hpp"
#include "mmtest/calibration.hpp"
#include "mmtest/chi_squared.hpp"
#include "mmtest/error.hpp"
#include "mmtest/mm_solver.hpp"

#ifndef MMTEST_VERSION
#define MMTEST_VERSION "dev"
#endif

namespace mmtest {

namespace {

constexpr int kDefaultFig1Points = 30;

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
};

// Column `c` of a trials x width buffer, in trial order.
Moments moments(const std::vector<double>& data, std::size_t width, std::size_t c,
                double scale = 1.0) {
  const std::size_t trials = data.size() / width;
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double x = scale * data[t * width + c];
    const double delta = x - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (x - mean);
  }
  return {mean, trials > 1 ? m2 / static_cast<double>(trials - 1) : 0.0};
}

std::vector<double> extract(const std::vector<double>& data, std::size_t width,
                            std::size_t c, double scale = 1.0) {
  const std::size_t trials = data.size() / width;
  std::vector<double> out(trials);
  for (std::size_t t = 0; t < trials; ++t) out[t] = scale * data[t * width + c];
  return out;
}

std::int64_t count_nonzero(const std::vector<double>& data, std::size_t width,
                           std::size_t c) {
  std::int64_t count = 0;
  for (std::size_t t = 0; t < data.size() / width; ++t) {
    if (data[t * width + c] != 0.0) ++count;
  }
  return count;
}

double status_code(SolveStatus s) {
  return s == SolveStatus::kConverged ? 0.0 : 1.0;
}

// Fraction of `sorted` (ascending) that is >= eta.
double tail_fraction(const std::vector<double>& sorted, double eta) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), eta);
  return static_cast<double>(sorted.end() - it) / static_cast<double>(sorted.size());
}

Distribution null_distribution(const ExperimentConfig& c) {
  if (c.pi0.empty()) return uniform_distribution(static_cast<std::size_t>(c.alphabet_size));
  return make_distribution(c.pi0);
}

Distribution alt_distribution(const ExperimentConfig& c) {
  if (c.pi1.empty()) return triangular_distribution(c.alphabet_size);
  return make_distribution(c.pi1);
}

std::vector<std::string> base_meta(const ExperimentConfig& c) {
  std::vector<std::string> meta;
  meta.push_back("seed = " + std::to_string(c.seed));
  meta.push_back(std::string("version = mmtest ") + MMTEST_VERSION);
  for (const std::string& line : c.echo()) meta.push_back("config: " + line);
  return meta;
}

const char* kRandomFeatureNote =
    "features: psi values iid standard normal per symbol, centered under pi0, "
    "redrawn on rank failure, stream(seed, 0)";

// Feature list: optional log-likelihood ratio, then file rows or random
// draws, long enough for the largest dimension.
std::vector<RealFunction> experiment_features(const ExperimentConfig& c,
                                              const Distribution& pi0,
                                              const RealFunction* llr,
                                              std::vector<std::string>& meta) {
  const int max_d = *std::max_element(c.dimensions.begin(), c.dimensions.end());
  std::vector<RealFunction> features;
  if (llr != nullptr) features.push_back(*llr);
  const std::size_t needed =
      static_cast<std::size_t>(max_d) - std::min<std::size_t>(features.size(), max_d);
  if (!c.features_path.empty()) {
    const FeatureFile file = read_feature_file(c.features_path);
    if (file.kind != ClassKind::kLinear) {
      throw Error(ErrorCode::kInvalidConfig, "experiment features must be linear");
    }
    if (file.rows.size() < needed) {
      throw Error(ErrorCode::kInvalidConfig,
                  "feature file has " + std::to_string(file.rows.size()) +
                      " rows, need " + std::to_string(needed));
    }
    features.insert(features.end(), file.rows.begin(), file.rows.begin() + needed);
    meta.push_back("features: rows of " + c.features_path);
  } else if (needed > 0) {
    RandomStream stream(c.seed, 0);
    const auto extra = random_features(needed, pi0, features, stream);
    features.insert(features.end(), extra.begin(), extra.end());
    meta.push_back(kRandomFeatureNote);
  }
  if (llr != nullptr) meta.push_back("features: psi_1 = log(pi1 / pi0)");
  return features;
}

std::vector<FunctionClass> nested_classes(const std::vector<RealFunction>& features,
                                          const std::vector<int>& dims,
                                          const Distribution& pi0) {
  std::vector<FunctionClass> out;
  for (int d : dims) {
    out.push_back(FunctionClass::linear(
        std::vector<RealFunction>(features.begin(), features.begin() + d), pi0));
  }
  return out;
}

std::vector<double> fig1_thresholds(const ExperimentConfig& c, std::int64_t n) {
  const int dof = c.alphabet_size - 1;
  if (!c.p_fa_grid.empty()) {
    std::vector<double> etas;
    for (double p : c.p_fa_grid) {
      etas.push_back(calibrate_threshold(dof, n, p, CalibrationMethod::kChiSquared).eta);
    }
    return etas;
  }
  if (!c.eta_grid.empty()) return c.eta_grid;
  // Log-spaced between the thresholds predicted for p_FA = 0.5 and 1e-6.
  const double lo = calibrate_threshold(dof, n, 0.5, CalibrationMethod::kChiSquared).eta;
  const double hi = calibrate_threshold(dof, n, 1e-6, CalibrationMethod::kChiSquared).eta;
  std::vector<double> etas(kDefaultFig1Points);
  for (int i = 0; i < kDefaultFig1Points; ++i) {
    const double s = static_cast<double>(i) / (kDefaultFig1Points - 1);
    etas[i] = std::exp(std::log(lo) + s * (std::log(hi) - std::log(lo)));
  }
  return etas;
}

void require_experiment(const ExperimentConfig& c, Experiment e) {
  c.validate();
  if (c.experiment != e) {
    throw Error(ErrorCode::kInvalidConfig,
                "config is for '" + experiment_name(c.experiment) + "', not '" +
                    experiment_name(e) + "'");
  }
}

}  // namespace

Distribution triangular_distribution(int alphabet_size) {
  if (alphabet_size < 1 || alphabet_size % 2 == 0) {
    throw Error(ErrorCode::kEvenAlphabet,
                "triangular pmf needs an odd alphabet size, got " +
                    std::to_string(alphabet_size));
  }
  const int m = (alphabet_size + 1) / 2;
  std::vector<double> w(static_cast<std::size_t>(alphabet_size));
  for (int k = 0; k < alphabet_size; ++k) {
    w[static_cast<std::size_t>(k)] =
        static_cast<double>(m - std::abs(k - (m - 1))) / (static_cast<double>(m) * m);
  }
  return make_distribution(std::move(w));
}

std::vector<RealFunction> random_features(std::size_t count, const Distribution& pi0,
                                          const std::vector<RealFunction>& existing,
                                          RandomStream& stream) {
  constexpr int kMaxRedraws = 100;
  std::vector<RealFunction> all = existing;
  std::vector<RealFunction> out;
  for (std::size_t i = 0; i < count; ++i) {
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxRedraws && !accepted; ++attempt) {
      std::vector<double> v(pi0.size());
      for (double& x : v) x = stream.normal();
      const double mean = pi0.mean(v);
      for (double& x : v) x -= mean;
      all.emplace_back(v);
      FeatureMatrix m(static_cast<Eigen::Index>(all.size()),
                      static_cast<Eigen::Index>(pi0.size()));
      for (std::size_t r = 0; r < all.size(); ++r) {
        for (std::size_t z = 0; z < pi0.size(); ++z) {
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(z)) = all[r][z];
        }
      }
      if (rank_with_constant(m, pi0) == all.size() + 1) {
        accepted = true;
        out.emplace_back(std::move(v));
      } else {
        all.pop_back();
      }
    }
    if (!accepted) {
      throw Error(ErrorCode::kRankDeficient,
                  "cannot draw " + std::to_string(count) +
                      " independent features on this support");
    }
  }
  return out;
}

RealFunction log_likelihood_ratio(const Distribution& pi1, const Distribution& pi0) {
  if (pi1.size() != pi0.size()) {
    throw Error(ErrorCode::kAlphabetMismatch, "pi1 and pi0 alphabets differ");
  }
  if (!pi1.full_support() || !pi0.full_support()) {
    throw Error(ErrorCode::kNotFullSupport,
                "log-likelihood ratio needs full-support distributions");
  }
  std::vector<double> v(pi0.size());
  for (std::size_t z = 0; z < v.size(); ++z) v[z] = std::log(pi1[z] / pi0[z]);
  return RealFunction(std::move(v));
}

double ks_distance_chi_squared(std::vector<double> sample, int dof) {
  if (sample.empty()) return 0.0;
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = chi_squared_cdf(dof, sample[i]);
    worst = std::max({worst, static_cast<double>(i + 1) / n - f,
                      f - static_cast<double>(i) / n});
  }
  return worst;
}

double detection_at_false_alarm(std::span<const double> null_stats,
                                std::span<const double> alt_stats, double p_fa) {
  if (null_stats.empty() || alt_stats.empty()) {
    throw Error(ErrorCode::kInvalidSampleSize, "empty statistic sample");
  }
  std::vector<double> h0(null_stats.begin(), null_stats.end());
  std::vector<double> h1(alt_stats.begin(), alt_stats.end());
  std::sort(h0.begin(), h0.end(), std::greater<>());
  std::sort(h1.begin(), h1.end(), std::greater<>());
  const double n0 = static_cast<double>(h0.size());
  const double n1 = static_cast<double>(h1.size());
  // Sweep the threshold downward through the pooled values; each distinct
  // value is an ROC vertex.
  std::size_t i = 0;
  std::size_t j = 0;
  double prev_fa = 0.0;
  double prev_d = 0.0;
  while (i < h0.size() || j < h1.size()) {
    double v = -INFINITY;
    if (i < h0.size()) v = h0[i];
    if (j < h1.size()) v = std::max(v, h1[j]);
    while (i < h0.size() && h0[i] >= v) ++i;
    while (j < h1.size() && h1[j] >= v) ++j;
    const double fa = static_cast<double>(i) / n0;
    const double pd = static_cast<double>(j) / n1;
    if (fa >= p_fa) {
      if (fa == prev_fa) return pd;
      return prev_d + (pd - prev_d) * (p_fa - prev_fa) / (fa - prev_fa);
    }
    prev_fa = fa;
    prev_d = pd;
  }
  return 1.0;
}

std::vector<double> RocStatistics::column(const std::vector<double>& stats,
                                          std::size_t c) const {
  return extract(stats, width, c);
}

RocStatistics roc_statistics(const ExperimentConfig& config, Execution exec) {
  require_experiment(config, Experiment::kRoc);
  const Distribution pi0 = null_distribution(config);
  if (config.pi1.empty() && config.alphabet_size % 2 == 0) {
    throw Error(ErrorCode::kEvenAlphabet, "roc needs an odd alphabet size");
  }
  const Distribution pi1 = alt_distribution(config);
  const RealFunction llr = log_likelihood_ratio(pi1, pi0);
  std::vector<std::string> meta;
  const auto features =
      experiment_features(config, pi0, config.include_llr ? &llr : nullptr, meta);
  const auto classes = nested_classes(features, config.dimensions, pi0);
  std::vector<MmSolver> solvers;
  for (const auto& cls : classes) solvers.emplace_back(pi0, cls);

  RocStatistics out;
  out.dimensions = config.dimensions;
  out.trials = config.trials;
  const std::size_t k = classes.size();
  out.width = 1 + 2 * k;
  const std::int64_t n = config.sample_sizes.front();
  auto make_kernel = [&](Hypothesis h, const Distribution& source) {
    return [&, h](std::int64_t t, std::span<double> row) {
      RandomStream stream(config.seed,
                          trial_stream_index(h, 0, static_cast<std::uint64_t>(t)));
      const Distribution gamma = sample_type(source, n, stream).as_distribution();
      row[0] = kl_divergence(gamma, pi0);
      for (std::size_t c = 0; c < k; ++c) {
        const MmResult r = solvers[c].solve(gamma);
        row[1 + c] = r.value;
        row[1 + k + c] = status_code(r.status);
      }
    };
  };
  out.null_stats = run_trials(config.trials, out.width, exec,
                              make_kernel(Hypothesis::kNull, pi0));
  out.alt_stats = run_trials(config.trials, out.width, exec,
                             make_kernel(Hypothesis::kAlternate, pi1));
  for (std::size_t c = 0; c < k; ++c) {
    out.nonconverged += count_nonzero(out.null_stats, out.width, 1 + k + c) +
                        count_nonzero(out.alt_stats, out.width, 1 + k + c);
  }
  return out;
}

RocReport roc_report(const ExperimentConfig& config, Execution exec) {
  const RocStatistics stats = roc_statistics(config, exec);
  const int full_rank = config.alphabet_size - 1;
  RocReport report;
  report.curve.column_names = {"hoeffding", "d", "eta", "p_fa", "p_d"};
  report.operating_points.column_names = {"hoeffding", "d", "p_fa", "p_d", "p_d_se"};
  auto meta = base_meta(config);
  if (config.features_path.empty()) meta.push_back(kRandomFeatureNote);
  if (config.include_llr) meta.push_back("features: psi_1 = log(pi1 / pi0)");
  meta.push_back("nonconverged_solves = " + std::to_string(stats.nonconverged));
  report.curve.meta = meta;
  report.operating_points.meta = meta;

  const double trials = static_cast<double>(stats.trials);
  for (std::size_t c = 0; c <= stats.dimensions.size(); ++c) {
    const bool hoeffding = c == 0;
    const double d = hoeffding ? full_rank : stats.dimensions[c - 1];
    std::vector<double> h0 = stats.column(stats.null_stats, c);
    std::vector<double> h1 = stats.column(stats.alt_stats, c);
    std::sort(h0.begin(), h0.end());
    std::sort(h1.begin(), h1.end());

    std::vector<double> etas = config.eta_grid;
    if (etas.empty()) {
      std::vector<double> pooled = h0;
      pooled.insert(pooled.end(), h1.begin(), h1.end());
      std::sort(pooled.begin(), pooled.end());
      const int k = config.roc_points;
      for (int i = 0; i < k; ++i) {
        const auto idx = static_cast<std::size_t>(
            std::floor(static_cast<double>(i) / (k - 1) * static_cast<double>(pooled.size() - 1)));
        etas.push_back(pooled[idx]);
      }
      etas.erase(std::unique(etas.begin(), etas.end()), etas.end());
    }
    etas.push_back(INFINITY);
    for (double eta : etas) {
      report.curve.add_row({hoeffding ? 1.0 : 0.0, d, eta, tail_fraction(h0, eta),
                            tail_fraction(h1, eta)});
    }
    for (double p : config.p_fa_grid) {
      const double pd = detection_at_false_alarm(h0, h1, p);
      report.operating_points.add_row({hoeffding ? 1.0 : 0.0, d, p, pd,
                                       std::sqrt(pd * (1.0 - pd) / trials)});
    }
  }

  for (std::size_t k = 0; k < stats.dimensions.size(); ++k) {
    if (stats.dimensions[k] != full_rank) continue;
    double gap = 0.0;
    for (const auto* data : {&stats.null_stats, &stats.alt_stats}) {
      for (std::int64_t t = 0; t < stats.trials; ++t) {
        const double* row = data->data() + static_cast<std::size_t>(t) * stats.width;
        gap = std::max(gap, std::abs(row[1 + k] - row[0]));
      }
    }
    report.full_rank_max_gap = gap;
  }
  return report;
}

ResultTable run_roc(const ExperimentConfig& config, Execution exec) {
  return roc_report(config, exec).curve;
}

ResultTable run_fig1(const ExperimentConfig& config, Execution exec) {
  require_experiment(config, Experiment::kFig1);
  const Distribution pi0 = null_distribution(config);
  const int dof = config.alphabet_size - 1;
  ResultTable table;
  table.column_names = {"n", "eta", "p_fa_mc", "p_fa_chisq", "p_fa_sanov", "trials"};
  table.meta = base_meta(config);
  for (std::size_t b = 0; b < config.sample_sizes.size(); ++b) {
    const std::int64_t n = config.sample_sizes[b];
    std::vector<double> stats = run_trials(
        config.trials, 1, exec, [&](std::int64_t t, std::span<double> row) {
          RandomStream stream(config.seed, trial_stream_index(Hypothesis::kNull, b,
                                                              static_cast<std::uint64_t>(t)));
          row[0] = kl_divergence(sample_type(pi0, n, stream).as_distribution(), pi0);
        });
    std::sort(stats.begin(), stats.end());
    for (double eta : fig1_thresholds(config, n)) {
      table.add_row({static_cast<double>(n), eta, tail_fraction(stats, eta),
                     chi_squared_false_alarm(dof, n, eta), sanov_false_alarm(n, eta),
                     static_cast<double>(config.trials)});
    }
  }
  return table;
}

ResultTable run_null_stats(const ExperimentConfig& config, Execution exec) {
  require_experiment(config, Experiment::kNullStats);
  const Distribution pi0 = null_distribution(config);
  ResultTable table;
  table.column_names = {"hoeffding", "n", "d", "mean_nD", "var_nD",
                        "ks_dist", "nonconverged", "trials"};
  table.meta = base_meta(config);
  const auto features = experiment_features(config, pi0, nullptr, table.meta);
  const auto classes = nested_classes(features, config.dimensions, pi0);
  std::vector<MmSolver> solvers;
  for (const auto& cls : classes) solvers.emplace_back(pi0, cls);
  const std::size_t k = classes.size();
  const std::size_t width = 1 + 2 * k;
  const double trials = static_cast<double>(config.trials);

  for (std::size_t b = 0; b < config.sample_sizes.size(); ++b) {
    const std::int64_t n = config.sample_sizes[b];
    const double nd = static_cast<double>(n);
    const auto data = run_trials(
        config.trials, width, exec, [&](std::int64_t t, std::span<double> row) {
          RandomStream stream(config.seed, trial_stream_index(Hypothesis::kNull, b,
                                                              static_cast<std::uint64_t>(t)));
          const Distribution gamma = sample_type(pi0, n, stream).as_distribution();
          row[0] = nd * kl_divergence(gamma, pi0);
          for (std::size_t c = 0; c < k; ++c) {
            const MmResult r = solvers[c].solve(gamma);
            row[1 + c] = nd * r.value;
            row[1 + k + c] = status_code(r.status);
          }
        });
    const int full = config.alphabet_size - 1;
    const Moments h = moments(data, width, 0);
    table.add_row({1.0, nd, static_cast<double>(full), h.mean, h.variance,
                   ks_distance_chi_squared(extract(data, width, 0, 2.0), full), 0.0,
                   trials});
    for (std::size_t c = 0; c < k; ++c) {
      const int d = config.dimensions[c];
      const Moments m = moments(data, width, 1 + c);
      table.add_row({0.0, nd, static_cast<double>(d), m.mean, m.variance,
                     ks_distance_chi_squared(extract(data, width, 1 + c, 2.0), d),
                     static_cast<double>(count_nonzero(data, width, 1 + k + c)),
                     trials});
    }
  }
  return table;
}

ResultTable run_alt_stats(const ExperimentConfig& config, Execution exec) {
  require_experiment(config, Experiment::kAltStats);
  const Distribution pi0 = null_distribution(config);
  const Distribution pi1 = alt_distribution(config);
  if (pi1 == pi0) {
    throw Error(ErrorCode::kInvalidConfig, "altstats needs pi1 != pi0");
  }
  const RealFunction llr = log_likelihood_ratio(pi1, pi0);
  ResultTable table;
  table.column_names = {"n", "d", "base_value", "bias_mc", "bias_se", "bias_pred",
                        "var_mc", "var_pred", "nonconverged", "trials"};
  table.meta = base_meta(config);
  const auto features =
      experiment_features(config, pi0, config.include_llr ? &llr : nullptr, table.meta);
  const auto classes = nested_classes(features, config.dimensions, pi0);
  std::vector<MmSolver> solvers;
  std::vector<double> base;
  std::vector<AsymptoticPrediction> predictions;
  for (const auto& cls : classes) {
    solvers.emplace_back(pi0, cls);
    const MmResult r = solvers.back().solve(pi1);
    if (r.status != SolveStatus::kConverged) {
      throw Error(ErrorCode::kNotAttained, "D^MM(pi1 || pi0) did not converge");
    }
    base.push_back(r.value);
    predictions.push_back(predicted_alt_stats(pi1, pi0, cls));
  }
  const std::size_t k = classes.size();
  const std::size_t width = 2 * k;
  const double trials = static_cast<double>(config.trials);

  for (std::size_t b = 0; b < config.sample_sizes.size(); ++b) {
    const std::int64_t n = config.sample_sizes[b];
    const double nd = static_cast<double>(n);
    const auto data = run_trials(
        config.trials, width, exec, [&](std::int64_t t, std::span<double> row) {
          RandomStream stream(config.seed, trial_stream_index(Hypothesis::kAlternate, b,
                                                              static_cast<std::uint64_t>(t)));
          const Distribution gamma = sample_type(pi1, n, stream).as_distribution();
          for (std::size_t c = 0; c < k; ++c) {
            const MmResult r = solvers[c].solve(gamma);
            row[c] = r.value;
            row[k + c] = status_code(r.status);
          }
        });
    for (std::size_t c = 0; c < k; ++c) {
      const Moments m = moments(data, width, c);
      const double bias = nd * (m.mean - base[c]);
      const double bias_se = nd * std::sqrt(m.variance / trials);
      table.add_row({nd, static_cast<double>(config.dimensions[c]), base[c], bias,
                     bias_se, predictions[c].bias_times_n, nd * m.variance,
                     predictions[c].sigma1_sq,
                     static_cast<double>(count_nonzero(data, width, k + c)), trials});
    }
  }
  return table;
}

ResultTable run_codelength(const ExperimentConfig& config, Execution exec) {
  require_experiment(config, Experiment::kCodelength);
  const Distribution pi = null_distribution(config);
  const double eps = config.epsilon;
  for (double w : pi.weights()) {
    if (!(w > eps)) {
      throw Error(ErrorCode::kEpsilonTooLarge,
                  "source mass " + std::to_string(w) + " is not above epsilon");
    }
  }
  const Distribution uniform = uniform_distribution(pi.size());
  const double fallback_excess = kl_divergence(pi, uniform);
  ResultTable table;
  table.column_names = {"n", "mean_n_excess", "var_n_excess", "fallback_rate", "trials"};
  table.meta = base_meta(config);
  table.meta.push_back("membership: all type masses > epsilon / 2");
  for (std::size_t b = 0; b < config.sample_sizes.size(); ++b) {
    const std::int64_t n = config.sample_sizes[b];
    const double nd = static_cast<double>(n);
    const auto data = run_trials(
        config.trials, 2, exec, [&](std::int64_t t, std::span<double> row) {
          RandomStream stream(config.seed, trial_stream_index(Hypothesis::kNull, b,
                                                              static_cast<std::uint64_t>(t)));
          const Distribution gamma = sample_type(pi, n, stream).as_distribution();
          const bool inside = std::all_of(gamma.weights().begin(), gamma.weights().end(),
                                          [&](double g) { return g > 0.5 * eps; });
          row[0] = nd * (inside ? kl_divergence(pi, gamma) : fallback_excess);
          row[1] = inside ? 0.0 : 1.0;
        });
    const Moments m = moments(data, 2, 0);
    const Moments f = moments(data, 2, 1);
    table.add_row({nd, m.mean, m.variance, f.mean, static_cast<double>(config.trials)});
  }
  return table;
}

ResultTable run_experiment(const ExperimentConfig& config, Execution exec) {
  switch (config.experiment) {
    case Experiment::kFig1: return run_fig1(config, exec);
    case Experiment::kRoc: return run_roc(config, exec);
    case Experiment::kNullStats: return run_null_stats(config, exec);
    case Experiment::kAltStats: return run_alt_stats(config, exec);
    case Experiment::kCodelength: return run_codelength(config, exec);
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown experiment");
}

}  // namespace mmtest
