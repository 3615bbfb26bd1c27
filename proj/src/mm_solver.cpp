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

#include "mmtest/mm_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mmtest/error.hpp"

namespace mmtest {

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxHalvings = 60;
constexpr double kBoundaryFraction = 0.01;
constexpr double kMaxDamping = 1e12;
constexpr double kFlatUlps = 64.0;

struct EvalPoint {
  ParameterVector r;
  double objective = 0.0;
  // sum_z mu(z) |f(z)| + |log_mgf|: the rounding error of `objective` is a
  // small multiple of eps times this.
  double objective_scale = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  Eigen::VectorXd f;
  Eigen::VectorXd twisted;
  FeatureMatrix psi_r;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

// Fills `out` at r. Requires r feasible for log-linear classes.
void evaluate_point(std::span<const double> mu, std::span<const double> pi,
                    const FunctionClass& cls, const Eigen::VectorXd* offset,
                    const ParameterVector& r, EvalPoint& out, bool with_hessian) {
  const FeatureMatrix& psi = cls.features();
  const Eigen::Index n = psi.cols();
  out.r = r;
  Eigen::VectorXd lin = psi.transpose() * r;
  if (cls.is_linear()) {
    out.f = std::move(lin);
    out.margin = std::numeric_limits<double>::infinity();
    out.psi_r = psi;
  } else {
    Eigen::ArrayXd margin = 1.0 + lin.array();
    out.margin = margin.minCoeff();
    if (!(out.margin > 0.0)) {
      throw Error(ErrorCode::kInfeasibleParameter,
                  "1 + r . psi(z) is not positive for some z");
    }
    out.f = margin.log().matrix();
    out.psi_r = psi;
    for (Eigen::Index i = 0; i < psi.rows(); ++i) {
      out.psi_r.row(i).array() /= margin.transpose();
    }
  }
  if (offset != nullptr) out.f += *offset;

  double fmax = -std::numeric_limits<double>::infinity();
  for (Eigen::Index z = 0; z < n; ++z) {
    if (pi[z] > 0.0) fmax = std::max(fmax, out.f[z]);
  }
  out.twisted.setZero(n);
  double mass = 0.0;
  for (Eigen::Index z = 0; z < n; ++z) {
    if (pi[z] > 0.0) {
      out.twisted[z] = pi[z] * std::exp(out.f[z] - fmax);
      mass += out.twisted[z];
    }
  }
  out.twisted /= mass;
  const double log_mgf_value = fmax + std::log(mass);

  double mu_f = 0.0;
  double mu_abs_f = 0.0;
  Eigen::VectorXd diff(n);
  for (Eigen::Index z = 0; z < n; ++z) {
    if (mu[z] > 0.0) {
      mu_f += mu[z] * out.f[z];
      mu_abs_f += mu[z] * std::abs(out.f[z]);
    }
    diff[z] = mu[z] - out.twisted[z];
  }
  out.objective = mu_f - log_mgf_value;
  out.objective_scale = mu_abs_f + std::abs(log_mgf_value);
  out.gradient = out.psi_r * diff;

  if (with_hessian) {
    // -Cov_twisted(psi^r), plus sum_z (mu - twisted)(z) d2f/dr2 for
    // log-linear classes where d2f/dr2 = -psi^r psi^rT. The two weightings
    // combine to diag(mu) in that case.
    const Eigen::VectorXd& weight = cls.is_linear() ? out.twisted : Eigen::VectorXd(
        Eigen::Map<const Eigen::VectorXd>(mu.data(), n));
    const Eigen::VectorXd mean = out.psi_r * out.twisted;
    out.hessian = -(out.psi_r * weight.asDiagonal() * out.psi_r.transpose());
    out.hessian += mean * mean.transpose();
    out.hessian = 0.5 * (out.hessian + out.hessian.transpose()).eval();
  }
}

void require_compatible(const Distribution& mu, const Distribution& pi,
                        const FunctionClass& cls) {
  if (mu.size() != pi.size()) {
    throw Error(ErrorCode::kAlphabetMismatch, "mu and pi alphabets differ");
  }
  if (cls.alphabet_size() != pi.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "class alphabet differs from the distributions");
  }
}

void require_parameter(const FunctionClass& cls, const ParameterVector& r) {
  if (!cls.feasible(r)) {  // also checks the dimension
    throw Error(ErrorCode::kInfeasibleParameter,
                "1 + r . psi(z) is not positive for some z");
  }
}

// Largest step in (0, 1] keeping the minimum margin above a fraction of its
// current value.
double max_feasible_step(const FunctionClass& cls, const EvalPoint& at,
                         const Eigen::VectorXd& direction) {
  if (cls.is_linear()) return 1.0;
  const Eigen::VectorXd margin = 1.0 + (cls.features().transpose() * at.r).array();
  const Eigen::VectorXd slope = cls.features().transpose() * direction;
  const double floor = kBoundaryFraction * at.margin;
  double step = 1.0;
  for (Eigen::Index z = 0; z < margin.size(); ++z) {
    if (slope[z] < 0.0) step = std::min(step, (margin[z] - floor) / -slope[z]);
  }
  return step;
}

}  // namespace

void SolverOptions::validate() const {
  if (!(grad_tol > 0.0) || max_iter <= 0 || !(damping_floor > 0.0) ||
      !(unbounded_norm > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "solver options must be positive");
  }
}

std::string solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kUnbounded: return "unbounded";
    case SolveStatus::kMaxIterations: return "max_iterations";
  }
  return "unknown";
}

double mm_objective(const Distribution& mu, const Distribution& pi,
                    const FunctionClass& cls, const ParameterVector& r) {
  require_compatible(mu, pi, cls);
  require_parameter(cls, r);
  EvalPoint p;
  evaluate_point(mu.weights(), pi.weights(), cls, nullptr, r, p, false);
  return p.objective;
}

Eigen::VectorXd objective_gradient(const Distribution& mu,
                                   const Distribution& pi,
                                   const FunctionClass& cls,
                                   const ParameterVector& r) {
  require_compatible(mu, pi, cls);
  require_parameter(cls, r);
  EvalPoint p;
  evaluate_point(mu.weights(), pi.weights(), cls, nullptr, r, p, false);
  return p.gradient;
}

Eigen::MatrixXd objective_hessian(const Distribution& mu,
                                  const Distribution& pi,
                                  const FunctionClass& cls,
                                  const ParameterVector& r) {
  require_compatible(mu, pi, cls);
  require_parameter(cls, r);
  EvalPoint p;
  evaluate_point(mu.weights(), pi.weights(), cls, nullptr, r, p, true);
  return p.hessian;
}

struct MmSolver::Point : EvalPoint {};

MmSolver::MmSolver(const Distribution& pi, const FunctionClass& cls,
                   SolverOptions options, std::optional<RealFunction> offset)
    : pi_(pi), cls_(cls), options_(options) {
  options_.validate();
  if (!pi_.full_support()) {
    throw Error(ErrorCode::kNotFullSupport, "base distribution lacks full support");
  }
  if (cls_.alphabet_size() != pi_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "class alphabet differs from the base distribution");
  }
  if (offset) {
    if (offset->size() != pi_.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "offset length differs");
    }
    offset_ = Eigen::Map<const Eigen::VectorXd>(offset->values().data(),
                                                static_cast<Eigen::Index>(offset->size()));
  }
}

void MmSolver::evaluate(std::span<const double> mu, const ParameterVector& r,
                        Point& out, bool with_hessian) const {
  evaluate_point(mu, pi_.weights(), cls_, offset_.size() > 0 ? &offset_ : nullptr,
                 r, out, with_hessian);
}

MmResult MmSolver::solve(const Distribution& mu) const {
  return solve(mu, ParameterVector::Zero(
                       static_cast<Eigen::Index>(cls_.dimension())));
}

MmResult MmSolver::solve(const Distribution& mu, const ParameterVector& start) const {
  require_parameter(cls_, start);
  if (mu.size() != pi_.size()) {
    throw Error(ErrorCode::kAlphabetMismatch, "mu and pi alphabets differ");
  }
  const auto d = static_cast<Eigen::Index>(cls_.dimension());
  const std::span<const double> m = mu.weights();

  Point current;
  evaluate(m, start, current, true);

  Point trial;
  MmResult result;
  result.status = SolveStatus::kMaxIterations;
  int iter = 0;
  for (;; ++iter) {
    const double gnorm = current.gradient.lpNorm<Eigen::Infinity>();
    if (gnorm <= options_.grad_tol) {
      result.status = SolveStatus::kConverged;
      break;
    }
    if (current.r.norm() > options_.unbounded_norm) {
      result.status = SolveStatus::kUnbounded;
      break;
    }
    if (iter >= options_.max_iter) break;

    const Eigen::MatrixXd neg_hessian = -current.hessian;
    const double scale = 1.0 + neg_hessian.diagonal().cwiseAbs().maxCoeff();
    double damping = 0.0;
    bool accepted = false;
    bool gradient_fallback = false;
    while (!accepted) {
      Eigen::VectorXd direction;
      if (gradient_fallback) {
        direction = current.gradient;
      } else {
        Eigen::MatrixXd a = neg_hessian;
        a.diagonal().array() += damping;
        Eigen::LLT<Eigen::MatrixXd> llt(a);
        if (llt.info() == Eigen::Success) direction = llt.solve(current.gradient);
      }
      const double slope =
          direction.size() == d ? current.gradient.dot(direction) : -1.0;
      if (direction.size() == d && direction.allFinite() && slope > 0.0) {
        double step = max_feasible_step(cls_, current, direction);
        for (int h = 0; h < kMaxHalvings && step > 0.0; ++h, step *= 0.5) {
          evaluate(m, current.r + step * direction, trial, false);
          const bool armijo =
              trial.objective >= current.objective + kArmijo * step * slope;
          // Near the optimum the Armijo gain falls below rounding of the
          // objective; accept steps that are flat within rounding but reduce
          // the gradient.
          const double rounding =
              kFlatUlps * std::numeric_limits<double>::epsilon() *
              (1.0 + std::max(current.objective_scale, trial.objective_scale));
          const bool flat_progress =
              trial.objective >= current.objective - rounding &&
              trial.gradient.lpNorm<Eigen::Infinity>() < 0.5 * gnorm;
          if (armijo || flat_progress) {
            accepted = true;
            break;
          }
        }
      }
      if (accepted) break;
      if (gradient_fallback) break;
      damping = std::max(options_.damping_floor, damping * 10.0);
      if (damping > kMaxDamping * scale) gradient_fallback = true;
    }
    if (!accepted) break;  // stalled; reported as kMaxIterations
    evaluate(m, trial.r, current, true);
  }

  result.iterations = iter;
  result.gradient_norm = current.gradient.lpNorm<Eigen::Infinity>();
  // r = 0 gives objective 0, so without an offset the supremum is >= 0 and
  // anything below is rounding.
  result.value = offset_.size() == 0 ? std::max(current.objective, 0.0)
                                     : current.objective;
  result.r_star = current.r;
  result.twisted_dist = make_distribution(
      std::vector<double>(current.twisted.data(),
                          current.twisted.data() + current.twisted.size()));
  return result;
}

MmResult mm_divergence(const Distribution& mu, const Distribution& pi,
                       const FunctionClass& cls, const SolverOptions& opts) {
  require_compatible(mu, pi, cls);
  return MmSolver(pi, cls, opts).solve(mu);
}

ReverseProjection reverse_i_projection(const Distribution& mu,
                                       const Distribution& pi,
                                       const FunctionClass& cls,
                                       const SolverOptions& opts) {
  const MmResult r = mm_divergence(mu, pi, cls, opts);
  if (r.status != SolveStatus::kConverged) {
    throw Error(ErrorCode::kNotAttained,
                "solver ended with status " + solve_status_name(r.status));
  }
  return {r.twisted_dist, r.value};
}

MmResult robust_divergence(const Distribution& mu, const Distribution& pi,
                           const std::vector<RealFunction>& features,
                           const SolverOptions& opts) {
  if (!pi.full_support()) {
    throw Error(ErrorCode::kNotFullSupport, "pi lacks full support");
  }
  const FunctionClass cls = FunctionClass::log_linear(features, pi, true);
  return mm_divergence(mu, pi, cls, opts);
}

Decomposition decomposition_terms(const Distribution& mu,
                                  const Distribution& pi1,
                                  const Distribution& pi0,
                                  const FunctionClass& cls,
                                  const SolverOptions& opts) {
  require_compatible(mu, pi0, cls);
  require_compatible(pi1, pi0, cls);
  const MmSolver null_solver(pi0, cls, opts);
  const MmResult base = null_solver.solve(pi1);
  if (base.status != SolveStatus::kConverged) {
    throw Error(ErrorCode::kNotAttained,
                "D^MM(pi1 || pi0) solve ended with status " +
                    solve_status_name(base.status));
  }
  Decomposition out;
  out.base = base.value;
  out.pi_tilde = base.twisted_dist;
  out.total = null_solver.solve(mu).value;

  if (cls.is_linear()) {
    // F - f_{r*} is F itself for a linear class.
    out.residual_mm = MmSolver(out.pi_tilde, cls, opts).solve(mu).value;
  } else {
    std::vector<double> shift(cls.alphabet_size());
    const RealFunction f_star = cls.evaluate(base.r_star);
    for (std::size_t z = 0; z < shift.size(); ++z) shift[z] = -f_star[z];
    const MmSolver shifted(out.pi_tilde, cls, opts, RealFunction(std::move(shift)));
    // r* is where the shifted class contains the zero function.
    out.residual_mm = shifted.solve(mu, base.r_star).value;
  }

  double linear = 0.0;
  for (std::size_t z = 0; z < mu.size(); ++z) {
    linear += (mu[z] - pi1[z]) * std::log(out.pi_tilde[z] / pi0[z]);
  }
  out.linear_term = linear;
  return out;
}

}  // namespace mmtest
