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

#ifndef MMTEST_ASYMPTOTICS_HPP_
#define MMTEST_ASYMPTOTICS_HPP_

// Large-sample predictions for the Hoeffding and mismatched statistics.

#include <string>

#include <Eigen/Dense>

#include "mmtest/alphabet.hpp"
#include "mmtest/function_class.hpp"
#include "mmtest/mm_solver.hpp"

namespace mmtest {

enum class LimitKind {
  kChiSquaredHalf,  // n * statistic -> (1/2) chi^2_dof
  kNormal,          // sqrt(n) * (statistic - mean) -> N(0, sigma1_sq)
};

struct AsymptoticPrediction {
  // lim E[n (statistic - limit value)].
  double bias_times_n = 0.0;
  // lim Var[n * statistic] under the null, lim Var[sqrt(n) * statistic]
  // under the alternate; `scaling_note` says which.
  double variance = 0.0;
  LimitKind limit = LimitKind::kChiSquaredHalf;
  int dof = 0;
  double sigma1_sq = 0.0;
  std::string scaling_note;
};

// Sigma(i, j) = mu(psi_i psi_j) - mu(psi_i) mu(psi_j); symmetric PSD.
struct FeatureCovariance {
  Eigen::MatrixXd matrix;
};

FeatureCovariance feature_covariance(const Distribution& mu,
                                     const FeatureMatrix& features);

// Xi = diag(mu) - mu mu^T.
Eigen::MatrixXd multinomial_covariance(const Distribution& mu);

// Cov_mu(g) = mu(g^2) - mu(g)^2.
double function_variance(const Distribution& mu, const RealFunction& g);

// M = Psi^T Sigma_{pi0}^{-1} Psi, the Hessian of mu -> D^MM(mu || pi0) at
// pi0. Throws kSingularCovariance when Sigma_{pi0} is not positive definite
// with reciprocal condition >= 1e-12.
Eigen::MatrixXd hessian_null(const Distribution& pi0, const FeatureMatrix& features);

// Statistic under the null with `dof` degrees of freedom: bias dof/2,
// variance of n * statistic dof/2.
AsymptoticPrediction predicted_null_stats(int dof);

// Statistic under the alternate pi1:
//   bias_times_n = (1/2) trace(Sigma_{pi1} Sigma_{pi_tilde}^{-1}),
//   sigma1_sq    = Cov_{pi1}(f_{r1}),
// with r1 the optimizer for D^MM(pi1 || pi0) and pi_tilde = pi0 twisted by
// f_{r1}. Covariances use psi^{r1}, which is psi itself for linear classes.
// Throws kNotAttained or kSingularCovariance.
AsymptoticPrediction predicted_alt_stats(const Distribution& pi1,
                                         const Distribution& pi0,
                                         const FunctionClass& cls,
                                         const SolverOptions& opts = {});

}  // namespace mmtest

#endif  // MMTEST_ASYMPTOTICS_HPP_
