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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Monte Carlo criteria run at full budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "mmtest/asymptotics.hpp"
#include "mmtest/calibration.hpp"
#include "mmtest/experiments.hpp"
#include "mmtest/mm_solver.hpp"
#include "test_support.hpp"

namespace {

using namespace mmtest;
using mmtest::testing::random_distribution;
using mmtest::testing::random_feasible;
using mmtest::testing::random_function;
using mmtest::testing::random_linear_class;
using mmtest::testing::random_log_linear_class;

constexpr std::uint64_t kSeed = 20260415;

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct Outcome {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Distribution mix(const Distribution& a, const Distribution& b, double t) {
  std::vector<double> w(a.size());
  for (std::size_t z = 0; z < a.size(); ++z) w[z] = (1 - t) * a[z] + t * b[z];
  return make_distribution(w);
}

std::vector<double> weights_of(const Distribution& d) {
  return {d.weights().begin(), d.weights().end()};
}

// Criteria 1 and 2 share one run.
ResultTable null_run() {
  ExperimentConfig c = default_config(Experiment::kNullStats);
  c.alphabet_size = 8;
  c.sample_sizes = {2000};
  c.dimensions = {3};
  c.trials = 100000;
  c.seed = kSeed;
  return run_null_stats(c);
}

Outcome criterion1(const ResultTable& t) {
  Outcome o;
  const double mean = t.at(1, "mean_nD");
  const double var = t.at(1, "var_nD");
  o.add("mean n*D^MM in [1.40, 1.60]", mean >= 1.40 && mean <= 1.60, fmt("%.4f", mean));
  o.add("var n*D^MM in [1.35, 1.65]", var >= 1.35 && var <= 1.65, fmt("%.4f", var));
  o.add("all solves converged", t.at(1, "nonconverged") == 0.0,
        fmt("%.0f nonconverged", t.at(1, "nonconverged")));
  return o;
}

Outcome criterion2(const ResultTable& t) {
  Outcome o;
  const double mean = t.at(0, "mean_nD");
  const double var = t.at(0, "var_nD");
  o.add("mean n*D in [3.35, 3.65]", mean >= 3.35 && mean <= 3.65, fmt("%.4f", mean));
  o.add("var n*D in [3.35, 3.65]", var >= 3.35 && var <= 3.65, fmt("%.4f", var));
  return o;
}

Outcome criterion3() {
  ExperimentConfig c = default_config(Experiment::kNullStats);
  c.alphabet_size = 8;
  c.sample_sizes = {5000};
  c.dimensions = {3};
  c.trials = 100000;
  c.seed = kSeed + 3;
  const ResultTable t = run_null_stats(c);
  Outcome o;
  const double ks = t.at(1, "ks_dist");
  o.add("KS(2n D^MM, chi2_3) < 0.02", ks < 0.02, fmt("%.5f", ks));
  return o;
}

Outcome criterion4() {
  ExperimentConfig c = default_config(Experiment::kFig1);
  c.alphabet_size = 20;
  c.sample_sizes = {1000};
  c.trials = 1000000;
  c.p_fa_grid = {1e-2, 1e-3};
  c.seed = kSeed + 4;
  const ResultTable t = run_fig1(c);
  Outcome o;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double mc = t.at(r, "p_fa_mc");
    const double chisq = t.at(r, "p_fa_chisq");
    const double sanov = t.at(r, "p_fa_sanov");
    const double err_chisq = std::abs(std::log10(mc) - std::log10(chisq));
    const double err_sanov = std::abs(std::log10(mc) - std::log10(sanov));
    o.add(fmt("p_fa=%.0e: |log10 mc/chisq| <= 0.3", chisq), err_chisq <= 0.3,
          fmt("mc %.3e, error %.3f", mc, err_chisq));
    o.add(fmt("p_fa=%.0e: Sanov error larger", chisq), err_sanov > err_chisq,
          fmt("sanov %.3e, error %.3f", sanov, err_sanov));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Distribution u = uniform_distribution(5);
  const Distribution tri = triangular_distribution(5);

  // psi_1 = L: the class contains the log-likelihood ratio.
  ExperimentConfig c = default_config(Experiment::kAltStats);
  c.alphabet_size = 5;
  c.sample_sizes = {5000};
  c.dimensions = {1};
  c.trials = 200000;
  c.seed = kSeed + 5;
  c.pi0 = weights_of(u);
  c.pi1 = weights_of(mix(u, tri, 0.2));
  c.include_llr = true;
  const ResultTable a = run_alt_stats(c);
  const Distribution p1 = make_distribution(c.pi1);
  const double cov_l = function_variance(p1, log_likelihood_ratio(p1, u));
  const double base_gap = std::abs(a.at(0, "base_value") - kl_divergence(p1, u));
  o.add("D^MM(pi1||pi0) = D(pi1||pi0)", base_gap < 1e-10, fmt("gap %.1e", base_gap));
  const double bias = a.at(0, "bias_mc");
  o.add("psi=L: bias within 10% of 0.5", std::abs(bias / 0.5 - 1) <= 0.10,
        fmt("%.4f +- %.4f", bias, a.at(0, "bias_se")));
  const double var = a.at(0, "var_mc");
  o.add("psi=L: var within 5% of Cov(L)", std::abs(var / cov_l - 1) <= 0.05,
        fmt("%.6f vs %.6f", var, cov_l));

  // Misspecified two-dimensional class.
  const auto path = std::filesystem::temp_directory_path() / "mmtest_acceptance_psi.txt";
  {
    std::ofstream f(path);
    f << "kind=linear\n-2 -1 0 1 2\n1 -1 0 -1 1\n";
  }
  c.pi1 = weights_of(mix(u, tri, 0.5));
  c.include_llr = false;
  c.dimensions = {2};
  c.features_path = path.string();
  c.seed = kSeed + 55;
  const ResultTable b = run_alt_stats(c);
  std::filesystem::remove(path);
  const double bias_b = b.at(0, "bias_mc");
  const double pred_b = b.at(0, "bias_pred");
  o.add("misspecified: bias within 10% of trace prediction",
        std::abs(bias_b / pred_b - 1) <= 0.10,
        fmt("%.4f +- %.4f vs %.4f", bias_b, b.at(0, "bias_se"), pred_b));
  return o;
}

Outcome criterion6() {
  ExperimentConfig c = default_config(Experiment::kRoc);
  c.seed = kSeed + 6;
  const RocReport r = roc_report(c);
  const ResultTable& ops = r.operating_points;
  Outcome o;
  for (double p : c.p_fa_grid) {
    std::vector<std::pair<double, double>> by_d;  // (p_d, se) in dimension order
    std::string detail;
    for (std::size_t i = 0; i < ops.rows.size(); ++i) {
      if (ops.at(i, "hoeffding") != 0.0 || ops.at(i, "p_fa") != p) continue;
      by_d.emplace_back(ops.at(i, "p_d"), ops.at(i, "p_d_se"));
      detail += fmt("d=%.0f:%.4f ", ops.at(i, "d"), ops.at(i, "p_d"));
    }
    bool ok = by_d.size() == c.dimensions.size();
    for (std::size_t k = 1; k < by_d.size(); ++k) {
      const double noise = 3 * std::hypot(by_d[k].second, by_d[k - 1].second);
      ok = ok && by_d[k].first <= by_d[k - 1].first + noise;
    }
    o.add(fmt("p_fa=%.2f: p_d non-increasing in d (3 sigma)", p), ok, detail);
  }
  o.add("d=18 statistic equals Hoeffding per trial (1e-9)",
        r.full_rank_max_gap >= 0.0 && r.full_rank_max_gap <= 1e-9,
        fmt("max gap %.2e", r.full_rank_max_gap));
  return o;
}

Outcome criterion7() {
  ExperimentConfig c = default_config(Experiment::kCodelength);
  c.alphabet_size = 6;
  c.sample_sizes = {4000};
  c.trials = 100000;
  c.epsilon = 0.05;
  c.seed = kSeed + 7;
  const ResultTable t = run_codelength(c);
  Outcome o;
  const double mean = t.at(0, "mean_n_excess");
  const double var = t.at(0, "var_n_excess");
  o.add("mean n*excess within 0.15 of 2.5", std::abs(mean - 2.5) <= 0.15, fmt("%.4f", mean));
  o.add("var n*excess within 0.25 of 2.5", std::abs(var - 2.5) <= 0.25, fmt("%.4f", var));
  return o;
}

Outcome criterion8() {
  Outcome o;
  RandomStream s(kSeed, 8);

  {
    double worst = -INFINITY;
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const std::size_t n = 3 + s() % 10;
      const std::size_t d = 1 + s() % (n - 1);
      const Distribution mu = random_distribution(n, s);
      const Distribution pi = random_distribution(n, s, 0.01);
      const FunctionClass cls =
          i % 2 ? random_log_linear_class(pi, d, s) : random_linear_class(n, d, s);
      const MmResult r = mm_divergence(mu, pi, cls);
      const double excess = r.value - kl_divergence(mu, pi);
      worst = std::max(worst, excess);
      failures += r.status != SolveStatus::kConverged || excess > 1e-8 || r.value < 0.0;
    }
    o.add("D^MM <= D on 1000 random pairs", failures == 0,
          fmt("max(D^MM - D) = %.2e", worst));
  }

  {
    double pyth = 0.0;
    double moment = 0.0;
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = 4 + s() % 6;
      const std::size_t d = 1 + s() % (n - 2);
      const Distribution mu = random_distribution(n, s);
      const Distribution pi = random_distribution(n, s, 0.01);
      const FunctionClass cls = random_linear_class(n, d, s);
      const ReverseProjection p = reverse_i_projection(mu, pi, cls);
      pyth = std::max(pyth, std::abs(kl_divergence(mu, pi) - p.value -
                                     kl_divergence(mu, p.nu_star)));
      for (std::size_t k = 0; k < d; ++k) {
        moment = std::max(moment, std::abs(mu.mean(cls.feature(k)) -
                                           p.nu_star.mean(cls.feature(k))));
      }
    }
    o.add("Pythagorean identity", pyth <= 1e-8, fmt("max residual %.2e", pyth));
    o.add("moment matching of nu*", moment <= 1e-8, fmt("max residual %.2e", moment));
  }

  {
    // N = 3, d = 1: the moment class {nu : nu(psi) = pi(psi)} is a segment.
    // Grid its first coordinate and solve the two linear constraints for the rest.
    const Distribution mu = make_distribution({0.6, 0.1, 0.3});
    const Distribution pi = make_distribution({0.2, 0.5, 0.3});
    const RealFunction psi({1.0, 2.0, 4.0});
    const double c = pi.mean(psi);
    const MmResult robust = robust_divergence(mu, pi, {psi});
    const int grid = 1000000;
    double best = INFINITY;
    for (int i = 1; i < grid; ++i) {
      const double a = static_cast<double>(i) / grid;
      // b + e = 1 - a, 2b + 4e = c - a.
      const double e = (c - a - 2 * (1 - a)) / 2;
      const double b = 1 - a - e;
      if (b <= 0 || e <= 0) continue;
      const double w[3] = {a, b, e};
      best = std::min(best, kl_divergence(mu.weights(), w));
    }
    const double gap = std::abs(robust.value - best);
    o.add("robust divergence vs moment-class grid (2e-4)", gap <= 2e-4,
          fmt("%.8f vs %.8f", robust.value, best));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Distribution p0 = random_distribution(5, s, 0.05);
      const Distribution p1 = random_distribution(5, s, 0.05);
      const Distribution mu = random_distribution(5, s, 0.05);
      const FunctionClass cls =
          i % 2 ? random_log_linear_class(p0, 2, s) : random_linear_class(5, 2, s);
      worst = std::max(worst, std::abs(decomposition_terms(mu, p1, p0, cls).identity_residual()));
    }
    o.add("decomposition identity on 100 instances", worst <= 1e-8,
          fmt("max residual %.2e", worst));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 3 + s() % 10;
      const std::size_t d = 1 + s() % (n - 1);
      const Distribution pi = random_distribution(n, s, 0.02);
      const FunctionClass cls = random_linear_class(n, d, s);
      const Eigen::MatrixXd mx = hessian_null(pi, cls.features()) * multinomial_covariance(pi);
      worst = std::max({worst, std::abs(mx.trace() - static_cast<double>(d)),
                        std::abs((mx * mx).trace() - static_cast<double>(d))});
    }
    o.add("trace(M Xi) = trace(M Xi M Xi) = d", worst <= 1e-8, fmt("max error %.2e", worst));
  }

  {
    double grad_err = 0.0;
    double hess_err = 0.0;
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 4 + s() % 6;
      const std::size_t d = 1 + s() % 3;
      const Distribution mu = random_distribution(n, s);
      const Distribution pi = random_distribution(n, s, 0.05);
      const FunctionClass cls =
          i % 2 ? random_log_linear_class(pi, d, s) : random_linear_class(n, d, s);
      const ParameterVector r = random_feasible(cls, s);
      const Eigen::VectorXd g = objective_gradient(mu, pi, cls, r);
      const Eigen::MatrixXd h = objective_hessian(mu, pi, cls, r);
      const double step = 1e-6;
      for (Eigen::Index k = 0; k < r.size(); ++k) {
        ParameterVector up = r, down = r;
        up[k] += step;
        down[k] -= step;
        const double fd =
            (mm_objective(mu, pi, cls, up) - mm_objective(mu, pi, cls, down)) / (2 * step);
        grad_err = std::max(grad_err, std::abs(g[k] - fd));
        const Eigen::VectorXd gd = (objective_gradient(mu, pi, cls, up) -
                                    objective_gradient(mu, pi, cls, down)) / (2 * step);
        hess_err = std::max(hess_err, (h.col(k) - gd).cwiseAbs().maxCoeff());
      }
    }
    o.add("gradient vs finite differences (1e-6)", grad_err <= 1e-6,
          fmt("max error %.2e", grad_err));
    o.add("Hessian vs finite differences (1e-5)", hess_err <= 1e-5,
          fmt("max error %.2e", hess_err));
  }

  {
    int violations = 0;
    double on_plane = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Distribution mu = random_distribution(6, s);
      const Distribution pi = random_distribution(6, s, 0.02);
      const FunctionClass cls = random_linear_class(6, 2, s);
      const MmResult r = mm_divergence(mu, pi, cls);
      const RealFunction f = cls.evaluate(r.r_star);
      const RealFunction g = f.shifted(-log_mgf(pi, f) - r.value);
      on_plane = std::max(on_plane, std::abs(mu.mean(g)));
      for (int checked = 0; checked < 100;) {
        const Distribution nu = mix(pi, random_distribution(6, s), s.uniform());
        if (mm_divergence(nu, pi, cls).value >= r.value) continue;
        violations += !(nu.mean(g) < 0.0);
        ++checked;
      }
    }
    o.add("supporting hyperplane through mu", on_plane <= 1e-9, fmt("|<mu, g*>| %.2e", on_plane));
    o.add("smaller D^MM balls on the negative side", violations == 0,
          fmt("%d violations in 2000", violations));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Distribution p0 = random_distribution(5, s, 0.05);
      const Distribution p1 = random_distribution(5, s, 0.05);
      const double eta = (0.05 + 0.09 * i) * kl_divergence(p1, p0);
      const double beta = error_exponent(p0, p1, eta).beta_star;
      // Scan rho on a 1e-6 grid, then rescan the two coarse cells around the
      // best point at 1e-9 so the oracle's own resolution is below tolerance.
      auto scan = [&](double lo, double hi, int steps, double& best_rho) {
        double best = INFINITY;
        for (int k = 0; k <= steps; ++k) {
          const double rho = lo + (hi - lo) * k / steps;
          const Distribution t = geometric_mixture(p0, p1, rho);
          if (kl_divergence(t, p0) <= eta && kl_divergence(t, p1) < best) {
            best = kl_divergence(t, p1);
            best_rho = rho;
          }
        }
        return best;
      };
      double rho = 0.0;
      scan(0.0, 1.0, 1000000, rho);
      const double scanned =
          scan(std::max(0.0, rho - 1e-6), std::min(1.0, rho + 1e-6), 2000, rho);
      worst = std::max(worst, std::abs(beta - scanned));
    }
    o.add("beta* bisection vs grid scan (1e-6)", worst <= 1e-6, fmt("max error %.2e", worst));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  ResultTable null_table;
  bool have_null = false;
  auto shared_null = [&]() -> const ResultTable& {
    if (!have_null) {
      null_table = null_run();
      have_null = true;
    }
    return null_table;
  };
  const std::vector<Criterion> criteria = {
      {1, "null bias/variance of n*D^MM (N=8, d=3, n=2000)",
       [&] { return criterion1(shared_null()); }},
      {2, "Hoeffding bias/variance (N=8, n=2000)", [&] { return criterion2(shared_null()); }},
      {3, "chi-squared limit of 2n*D^MM (d=3, n=5000)", criterion3},
      {4, "false-alarm prediction (N=20, n=1000)", criterion4},
      {5, "alternate-hypothesis bias/variance (N=5, n=5000)", criterion5},
      {6, "ROC ordering in d and full-rank equality (N=19, n=40)", criterion6},
      {7, "codelength excess (N=6, n=4000)", criterion7},
      {8, "deterministic identities", criterion8},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && o.pass();
    failed += !pass;
    std::printf("[%s] criterion %d: %s (%.1f s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                secs);
    for (const auto& check : o.checks) {
      std::printf("    %-4s %s: %s\n", check.pass ? "ok" : "FAIL", check.name.c_str(),
                  check.detail.c_str());
    }
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
