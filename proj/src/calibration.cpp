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

#include "mmtest/calibration.hpp"

#include <cmath>

#include "mmtest/chi_squared.hpp"
#include "mmtest/error.hpp"

namespace mmtest {

namespace {

int decide(double statistic, double eta) { return statistic >= eta ? 1 : 0; }

void require_full_support(const Distribution& pi0) {
  if (!pi0.full_support()) {
    throw Error(ErrorCode::kNotFullSupport, "null distribution lacks full support");
  }
}

}  // namespace

std::string calibration_method_name(CalibrationMethod method) {
  switch (method) {
    case CalibrationMethod::kChiSquared: return "chisq";
    case CalibrationMethod::kSanov: return "sanov";
    case CalibrationMethod::kManual: return "manual";
  }
  return "unknown";
}

TestOutcome hoeffding_test(const EmpiricalType& gamma_n, const Distribution& pi0,
                           const CalibratedTest& test) {
  require_full_support(pi0);
  TestOutcome out;
  out.statistic = kl_divergence(gamma_n.as_distribution(), pi0);
  out.decision = decide(out.statistic, test.eta);
  return out;
}

TestOutcome mismatched_test(const EmpiricalType& gamma_n, const Distribution& pi0,
                            const FunctionClass& cls, const CalibratedTest& test,
                            const SolverOptions& opts) {
  require_full_support(pi0);
  const MmResult r = mm_divergence(gamma_n.as_distribution(), pi0, cls, opts);
  TestOutcome out;
  out.statistic = r.value;
  out.decision = decide(out.statistic, test.eta);
  out.solver_status = r.status;
  return out;
}

CalibratedTest calibrate_threshold(int dof, std::int64_t n, double p_fa,
                                   CalibrationMethod method) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidSampleSize, "n must be >= 1");
  }
  if (!(p_fa > 0.0 && p_fa < 1.0)) {
    throw Error(ErrorCode::kInvalidProbability, "p_fa must lie in (0, 1)");
  }
  CalibratedTest t;
  t.method = method;
  t.n = n;
  switch (method) {
    case CalibrationMethod::kChiSquared:
      t.eta = chi_squared_quantile(dof, 1.0 - p_fa) / (2.0 * static_cast<double>(n));
      break;
    case CalibrationMethod::kSanov:
      t.eta = -std::log(p_fa) / static_cast<double>(n);
      break;
    case CalibrationMethod::kManual:
      throw Error(ErrorCode::kInvalidConfig, "manual thresholds are not calibrated");
  }
  return t;
}

double chi_squared_false_alarm(int dof, std::int64_t n, double eta) {
  return chi_squared_sf(dof, 2.0 * static_cast<double>(n) * eta);
}

double sanov_false_alarm(std::int64_t n, double eta) {
  return std::exp(-static_cast<double>(n) * eta);
}

Distribution geometric_mixture(const Distribution& pi0, const Distribution& pi1,
                               double rho) {
  if (pi0.size() != pi1.size()) {
    throw Error(ErrorCode::kAlphabetMismatch, "pi0 and pi1 alphabets differ");
  }
  // Work in logs relative to the max to avoid underflow.
  std::vector<double> logw(pi0.size(), -INFINITY);
  double top = -INFINITY;
  for (std::size_t z = 0; z < pi0.size(); ++z) {
    if (pi0[z] > 0.0 && pi1[z] > 0.0) {
      logw[z] = (1.0 - rho) * std::log(pi0[z]) + rho * std::log(pi1[z]);
      top = std::max(top, logw[z]);
    }
  }
  std::vector<double> w(pi0.size(), 0.0);
  for (std::size_t z = 0; z < w.size(); ++z) {
    if (std::isfinite(logw[z])) w[z] = std::exp(logw[z] - top);
  }
  return make_distribution(std::move(w));
}

ExponentResult error_exponent(const Distribution& pi0, const Distribution& pi1,
                              double eta) {
  if (pi0.size() != pi1.size()) {
    throw Error(ErrorCode::kAlphabetMismatch, "pi0 and pi1 alphabets differ");
  }
  if (!pi0.same_support(pi1)) {
    throw Error(ErrorCode::kUnequalSupports, "pi0 and pi1 supports differ");
  }
  const double upper = kl_divergence(pi1, pi0);
  if (!(eta > 0.0 && eta < upper)) {
    throw Error(ErrorCode::kEtaOutOfRange,
                "eta must lie in (0, D(pi1||pi0)) = (0, " + std::to_string(upper) + ")");
  }
  // D(pi_rho || pi0) increases from 0 at rho = 0 to D(pi1 || pi0) at rho = 1.
  double lo = 0.0;
  double hi = 1.0;
  double rho = 0.5;
  Distribution tilted;
  for (int i = 0; i < 200; ++i) {
    rho = 0.5 * (lo + hi);
    tilted = geometric_mixture(pi0, pi1, rho);
    const double gap = kl_divergence(tilted, pi0) - eta;
    if (std::abs(gap) <= 1e-12 || hi - lo < 1e-16) break;
    if (gap < 0.0) lo = rho;
    else hi = rho;
  }
  return {kl_divergence(tilted, pi1), rho, tilted};
}

}  // namespace mmtest
