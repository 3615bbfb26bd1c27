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

// mmtest command-line front end.
//
//   mmtest divergence --mu mu.txt --pi pi.txt
//   mmtest mmdiv --mu mu.txt --pi pi.txt --class feats.txt [--out r.csv]
//                [--max-iter 200] [--tol 1e-10]
//   mmtest calibrate --dof 2 --n 100 --pfa 0.05 [--method chisq|sanov]
//   mmtest exponent --pi0 p0.txt --pi1 p1.txt --eta 0.01
//   mmtest experiment fig1 --config fig1.cfg --seed 7 --out fig1.csv
//
// Exit status: 0 on success, 1 on invalid input, 2 on numerical failure.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mmtest/alphabet.hpp"
#include "mmtest/calibration.hpp"
#include "mmtest/config.hpp"
#include "mmtest/error.hpp"
#include "mmtest/experiments.hpp"
#include "mmtest/function_class.hpp"
#include "mmtest/mm_solver.hpp"
#include "mmtest/result_table.hpp"

namespace {

using namespace mmtest;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNumerical = 2;

std::string points_path(const std::string& out) {
  const std::string suffix = ".csv";
  if (out.size() > suffix.size() &&
      out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return out.substr(0, out.size() - suffix.size()) + "_points.csv";
  }
  return out + "_points.csv";
}

int run_divergence(const std::string& mu_path, const std::string& pi_path) {
  const Distribution mu = read_distribution(mu_path);
  const Distribution pi = read_distribution(pi_path);
  if (mu.size() != pi.size()) {
    throw Error(ErrorCode::kAlphabetMismatch, "mu and pi alphabets differ");
  }
  std::printf("divergence = %.12f\n", kl_divergence(mu, pi));
  return kExitOk;
}

int run_mmdiv(const std::string& mu_path, const std::string& pi_path,
              const std::string& class_path, const std::string& out,
              const SolverOptions& opts) {
  const Distribution mu = read_distribution(mu_path);
  const Distribution pi = read_distribution(pi_path);
  const FunctionClass cls = build_class(read_feature_file(class_path), pi);
  const MmResult r = mm_divergence(mu, pi, cls, opts);
  if (!out.empty()) {
    ResultTable table;
    table.column_names = {"value", "converged", "iterations", "gradient_norm"};
    for (Eigen::Index i = 0; i < r.r_star.size(); ++i) {
      table.column_names.push_back("r" + std::to_string(i + 1));
    }
    std::vector<double> row = {r.value, r.status == SolveStatus::kConverged ? 1.0 : 0.0,
                               static_cast<double>(r.iterations), r.gradient_norm};
    for (Eigen::Index i = 0; i < r.r_star.size(); ++i) row.push_back(r.r_star[i]);
    table.add_row(row);
    table.meta.push_back("class = " + class_kind_name(cls.kind()));
    write_csv(out, table);
  }
  if (r.status != SolveStatus::kConverged) {
    std::cerr << "mmtest: solver status " << solve_status_name(r.status)
              << " after " << r.iterations << " iterations, best value "
              << r.value << "\n";
    return kExitNumerical;
  }
  std::printf("value = %.12f (%d iterations)\n", r.value, r.iterations);
  return kExitOk;
}

int run_calibrate(int dof, std::int64_t n, double p_fa, const std::string& method) {
  const CalibrationMethod m =
      method == "sanov" ? CalibrationMethod::kSanov : CalibrationMethod::kChiSquared;
  const CalibratedTest test = calibrate_threshold(dof, n, p_fa, m);
  std::printf("eta = %.12f (%s)\n", test.eta, calibration_method_name(m).c_str());
  return kExitOk;
}

int run_exponent(const std::string& pi0_path, const std::string& pi1_path,
                 double eta, const std::string& out) {
  const Distribution pi0 = read_distribution(pi0_path);
  const Distribution pi1 = read_distribution(pi1_path);
  const ExponentResult e = error_exponent(pi0, pi1, eta);
  if (!out.empty()) write_distribution(out, e.tilted);
  std::printf("beta_star = %.12f rho = %.12f\n", e.beta_star, e.rho);
  return kExitOk;
}

int run_experiment_command(const std::string& kind, const std::string& config_path,
                           std::optional<std::uint64_t> seed,
                           std::optional<std::int64_t> trials, std::string out) {
  const Experiment e = parse_experiment(kind);
  ExperimentConfig config =
      config_path.empty() ? default_config(e) : read_config(config_path, e);
  if (config.experiment != e) {
    throw Error(ErrorCode::kInvalidConfig,
                "config file is for '" + experiment_name(config.experiment) + "'");
  }
  if (seed) config.seed = *seed;
  if (trials) config.trials = *trials;
  if (out.empty()) out = config.out_path.empty() ? kind + ".csv" : config.out_path;
  config.out_path = out;

  if (e == Experiment::kRoc) {
    const RocReport report = roc_report(config);
    write_csv(out, report.curve);
    write_csv(points_path(out), report.operating_points);
    std::printf("roc: %zu curve rows -> %s, %zu operating points -> %s\n",
                report.curve.rows.size(), out.c_str(),
                report.operating_points.rows.size(), points_path(out).c_str());
    return kExitOk;
  }
  const ResultTable table = run_experiment(config);
  write_csv(out, table);
  std::printf("%s: %zu rows -> %s\n", kind.c_str(), table.rows.size(), out.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal and mismatched hypothesis tests"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("mmtest ") + MMTEST_VERSION);

  std::string mu_path, pi_path, class_path, out, pi0_path, pi1_path;
  std::string config_path, method = "chisq", kind;
  int dof = 0;
  std::int64_t n = 0;
  double p_fa = 0.0, eta = 0.0;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> trials;
  SolverOptions solver;

  auto* divergence = app.add_subcommand("divergence", "D(mu || pi)");
  divergence->add_option("--mu", mu_path)->required();
  divergence->add_option("--pi", pi_path)->required();

  auto* mmdiv = app.add_subcommand("mmdiv", "Mismatched divergence D^MM(mu || pi)");
  mmdiv->add_option("--mu", mu_path)->required();
  mmdiv->add_option("--pi", pi_path)->required();
  mmdiv->add_option("--class", class_path, "Feature file")->required();
  mmdiv->add_option("--out", out, "CSV with the optimizer");
  mmdiv->add_option("--max-iter", solver.max_iter)->check(CLI::PositiveNumber);
  mmdiv->add_option("--tol", solver.grad_tol, "Gradient tolerance")
      ->check(CLI::PositiveNumber);

  auto* calibrate = app.add_subcommand("calibrate", "Threshold for a target p_FA");
  calibrate->add_option("--dof", dof)->required();
  calibrate->add_option("--n", n)->required();
  calibrate->add_option("--pfa", p_fa)->required();
  calibrate->add_option("--method", method)
      ->check(CLI::IsMember({"chisq", "sanov"}));

  auto* exponent = app.add_subcommand("exponent", "Optimal missed-detection exponent");
  exponent->add_option("--pi0", pi0_path)->required();
  exponent->add_option("--pi1", pi1_path)->required();
  exponent->add_option("--eta", eta)->required();
  exponent->add_option("--out", out, "Write the tilted distribution");

  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  experiment->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"fig1", "roc", "nullstats", "altstats", "codelength"}));
  experiment->add_option("--config", config_path)->check(CLI::ExistingFile);
  experiment->add_option("--seed", seed);
  experiment->add_option("--trials", trials);
  experiment->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*divergence) return run_divergence(mu_path, pi_path);
    if (*mmdiv) return run_mmdiv(mu_path, pi_path, class_path, out, solver);
    if (*calibrate) return run_calibrate(dof, n, p_fa, method);
    if (*exponent) return run_exponent(pi0_path, pi1_path, eta, out);
    if (*experiment) return run_experiment_command(kind, config_path, seed, trials, out);
  } catch (const Error& e) {
    std::cerr << "mmtest: " << e.what() << "\n";
    return is_numerical_failure(e.code()) ? kExitNumerical : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "mmtest: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
