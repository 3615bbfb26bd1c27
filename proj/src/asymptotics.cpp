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

#include "mmtest/asymptotics.hpp"

#include <cmath>

#include "mmtest/error.hpp"

namespace mmtest {

namespace {

constexpr double kMinReciprocalCondition = 1e-12;

Eigen::LLT<Eigen::MatrixXd> factor_covariance(const Eigen::MatrixXd& sigma) {
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success || !(llt.rcond() >= kMinReciprocalCondition)) {
    throw Error(ErrorCode::kSingularCovariance,
                "feature covariance is not positive definite; the features "
                "and the constant are linearly dependent on the support");
  }
  return llt;
}

}  // namespace

FeatureCovariance feature_covariance(const Distribution& mu,
                                     const FeatureMatrix& features) {
  if (static_cast<std::size_t>(features.cols()) != mu.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature length differs from the alphabet size");
  }
  const Eigen::Map<const Eigen::VectorXd> w(mu.weights().data(),
                                            static_cast<Eigen::Index>(mu.size()));
  const Eigen::VectorXd mean = features * w;
  Eigen::MatrixXd sigma = features * w.asDiagonal() * features.transpose();
  sigma -= mean * mean.transpose();
  sigma = 0.5 * (sigma + sigma.transpose()).eval();
  return {std::move(sigma)};
}

Eigen::MatrixXd multinomial_covariance(const Distribution& mu) {
  const Eigen::Map<const Eigen::VectorXd> w(mu.weights().data(),
                                            static_cast<Eigen::Index>(mu.size()));
  Eigen::MatrixXd xi = -w * w.transpose();
  xi.diagonal() += w;
  return xi;
}

double function_variance(const Distribution& mu, const RealFunction& g) {
  const double m = mu.mean(g);
  double acc = 0.0;
  for (std::size_t z = 0; z < mu.size(); ++z) {
    if (mu[z] > 0.0) acc += mu[z] * (g[z] - m) * (g[z] - m);
  }
  return acc;
}

Eigen::MatrixXd hessian_null(const Distribution& pi0, const FeatureMatrix& features) {
  const FeatureCovariance sigma = feature_covariance(pi0, features);
  const auto llt = factor_covariance(sigma.matrix);
  const Eigen::MatrixXd psi = features;
  return psi.transpose() * llt.solve(psi);
}

AsymptoticPrediction predicted_null_stats(int dof) {
  if (dof < 1) {
    throw Error(ErrorCode::kInvalidConfig, "degrees of freedom must be >= 1");
  }
  AsymptoticPrediction p;
  p.bias_times_n = 0.5 * dof;
  p.variance = 0.5 * dof;
  p.limit = LimitKind::kChiSquaredHalf;
  p.dof = dof;
  p.scaling_note = "E[n D] and Var[n D]; n D -> chi^2_dof / 2";
  return p;
}

AsymptoticPrediction predicted_alt_stats(const Distribution& pi1,
                                         const Distribution& pi0,
                                         const FunctionClass& cls,
                                         const SolverOptions& opts) {
  const MmResult r1 = mm_divergence(pi1, pi0, cls, opts);
  if (r1.status != SolveStatus::kConverged) {
    throw Error(ErrorCode::kNotAttained,
                "D^MM(pi1 || pi0) solve ended with status " +
                    solve_status_name(r1.status));
  }
  const FeatureMatrix psi = cls.feature_gradient(r1.r_star);
  const Eigen::MatrixXd sigma1 = feature_covariance(pi1, psi).matrix;
  const Eigen::MatrixXd sigma_tilde = feature_covariance(r1.twisted_dist, psi).matrix;
  const auto llt = factor_covariance(sigma_tilde);

  AsymptoticPrediction p;
  p.bias_times_n = 0.5 * llt.solve(sigma1).trace();
  p.sigma1_sq = function_variance(pi1, cls.evaluate(r1.r_star));
  p.variance = p.sigma1_sq;
  p.limit = LimitKind::kNormal;
  p.dof = static_cast<int>(cls.dimension());
  p.scaling_note =
      "E[n (D - D^MM(pi1||pi0))] and Var[sqrt(n) D]; "
      "sqrt(n) (D - D^MM(pi1||pi0)) -> N(0, sigma1_sq)";
  return p;
}

}  // namespace mmtest
