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

#ifndef MMTEST_CALIBRATION_HPP_
#define MMTEST_CALIBRATION_HPP_

// Decision rules, threshold calibration and the optimal error-exponent
// tradeoff.

#include <cstdint>
#include <string>

#include "mmtest/alphabet.hpp"
#include "mmtest/function_class.hpp"
#include "mmtest/mm_solver.hpp"

namespace mmtest {

enum class StatisticKind { kHoeffding, kMismatched };
enum class CalibrationMethod { kChiSquared, kSanov, kManual };

std::string calibration_method_name(CalibrationMethod method);

struct CalibratedTest {
  StatisticKind statistic = StatisticKind::kHoeffding;
  double eta = 0.0;  // nats, >= 0
  CalibrationMethod method = CalibrationMethod::kManual;
  std::int64_t n = 0;  // sample size targeted by the calibration
};

struct TestOutcome {
  double statistic = 0.0;
  int decision = 0;  // 1 iff statistic >= eta
  SolveStatus solver_status = SolveStatus::kConverged;
};

// Decision 1 iff D(gamma || pi0) >= eta. Throws kNotFullSupport.
TestOutcome hoeffding_test(const EmpiricalType& gamma_n, const Distribution& pi0,
                           const CalibratedTest& test);

// Decision 1 iff D^MM(gamma || pi0) >= eta. A solve that does not converge
// contributes the best value reached and is flagged in `solver_status`.
TestOutcome mismatched_test(const EmpiricalType& gamma_n, const Distribution& pi0,
                            const FunctionClass& cls, const CalibratedTest& test,
                            const SolverOptions& opts = {});

// kChiSquared: eta = chi2_quantile(dof, 1 - p_fa) / (2n).
// kSanov:      eta = -log(p_fa) / n.
// Throws kInvalidProbability, kInvalidSampleSize.
CalibratedTest calibrate_threshold(int dof, std::int64_t n, double p_fa,
                                   CalibrationMethod method);

// Predicted false-alarm probabilities for threshold eta at sample size n.
double chi_squared_false_alarm(int dof, std::int64_t n, double eta);
double sanov_false_alarm(std::int64_t n, double eta);

struct ExponentResult {
  double beta_star = 0.0;  // D(pi_rho || pi1)
  double rho = 0.0;
  Distribution tilted;  // pi_rho proportional to pi0^(1-rho) pi1^rho
};

// Geometric mixture pi0^(1-rho) pi1^rho, normalized.
Distribution geometric_mixture(const Distribution& pi0, const Distribution& pi1,
                               double rho);

// Best missed-detection exponent under false-alarm exponent eta: bisection
// on rho until D(pi_rho || pi0) = eta within 1e-12. Throws kUnequalSupports
// and kEtaOutOfRange (eta must lie in (0, D(pi1 || pi0))).
ExponentResult error_exponent(const Distribution& pi0, const Distribution& pi1,
                              double eta);

}  // namespace mmtest

#endif  // MMTEST_CALIBRATION_HPP_
