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

#ifndef MMTEST_MM_SOLVER_HPP_
#define MMTEST_MM_SOLVER_HPP_

// Mismatched divergence
//
//   D^MM(mu || pi) = sup_r { <mu, f_r> - log <pi, exp f_r> }
//
// computed by damped Newton ascent on the concave objective, together with
// the reverse I-projection, the robust divergence of a moment class, and the
// four-term decomposition around the optimizer of a reference pair.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mmtest/alphabet.hpp"
#include "mmtest/function_class.hpp"

namespace mmtest {

struct SolverOptions {
  double grad_tol = 1e-10;
  int max_iter = 200;
  double damping_floor = 1e-10;
  double unbounded_norm = 1e8;

  // Throws kInvalidConfig unless every field is positive.
  void validate() const;
};

enum class SolveStatus { kConverged, kUnbounded, kMaxIterations };

std::string solve_status_name(SolveStatus status);

struct MmResult {
  double value = 0.0;  // nats
  ParameterVector r_star;
  Distribution twisted_dist;  // pi twisted by f_{r_star}
  double gradient_norm = 0.0;  // infinity norm at r_star
  int iterations = 0;
  SolveStatus status = SolveStatus::kMaxIterations;
};

// <mu, f_r> - log <pi, exp f_r>.
double mm_objective(const Distribution& mu, const Distribution& pi,
                    const FunctionClass& cls, const ParameterVector& r);

// <mu, psi^r> - <twisted(pi, f_r), psi^r>.
Eigen::VectorXd objective_gradient(const Distribution& mu,
                                   const Distribution& pi,
                                   const FunctionClass& cls,
                                   const ParameterVector& r);

// Hessian of mm_objective in r. For linear classes this is minus the feature
// covariance under the twisted distribution; log-linear classes add the
// curvature of log(1 + r . psi).
Eigen::MatrixXd objective_hessian(const Distribution& mu,
                                  const Distribution& pi,
                                  const FunctionClass& cls,
                                  const ParameterVector& r);

// Solver bound to a base distribution and class, reusable across many mu.
// `offset` (optional) is added to every f_r, which lets the same routine
// maximize over the shifted class {f_r + offset}.
class MmSolver {
 public:
  MmSolver(const Distribution& pi, const FunctionClass& cls,
           SolverOptions options = {},
           std::optional<RealFunction> offset = std::nullopt);

  // Starts from r = 0.
  MmResult solve(const Distribution& mu) const;
  // `start` must be feasible for the class.
  MmResult solve(const Distribution& mu, const ParameterVector& start) const;

  const Distribution& base() const noexcept { return pi_; }
  const FunctionClass& function_class() const noexcept { return cls_; }

 private:
  struct Point;
  void evaluate(std::span<const double> mu, const ParameterVector& r,
                Point& out, bool with_hessian) const;

  Distribution pi_;
  FunctionClass cls_;
  SolverOptions options_;
  Eigen::VectorXd offset_;
};

// Throws kNotFullSupport if pi lacks full support, kAlphabetMismatch or
// kDimensionMismatch on size mismatches.
MmResult mm_divergence(const Distribution& mu, const Distribution& pi,
                       const FunctionClass& cls, const SolverOptions& opts = {});

struct ReverseProjection {
  Distribution nu_star;
  double value = 0.0;  // D^MM(mu || pi)
};

// Member of the twisted family of pi closest to mu in D(mu || .). Throws
// kNotAttained unless the underlying solve converged.
ReverseProjection reverse_i_projection(const Distribution& mu,
                                       const Distribution& pi,
                                       const FunctionClass& cls,
                                       const SolverOptions& opts = {});

// inf { D(mu || nu) : <nu, psi> = <pi, psi> }, via the centered log-linear
// class built from `features`.
MmResult robust_divergence(const Distribution& mu, const Distribution& pi,
                           const std::vector<RealFunction>& features,
                           const SolverOptions& opts = {});

struct Decomposition {
  double total = 0.0;        // D^MM_F(mu || pi0)
  double base = 0.0;         // D^MM_F(pi1 || pi0)
  double residual_mm = 0.0;  // D^MM_G(mu || pi_tilde), G = F - f_{r*}
  double linear_term = 0.0;  // <mu - pi1, log(pi_tilde / pi0)>
  Distribution pi_tilde;

  double identity_residual() const {
    return total - (base + residual_mm + linear_term);
  }
};

// Each term is an independent evaluation. Throws kNotAttained when the
// pi1 solve does not converge.
Decomposition decomposition_terms(const Distribution& mu,
                                  const Distribution& pi1,
                                  const Distribution& pi0,
                                  const FunctionClass& cls,
                                  const SolverOptions& opts = {});

}  // namespace mmtest

#endif  // MMTEST_MM_SOLVER_HPP_
