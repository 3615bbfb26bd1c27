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

#include "mmtest/chi_squared.hpp"

#include <cmath>
#include <limits>

#include "mmtest/error.hpp"

namespace mmtest {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxTerms = 10000;

// P(a, x) by its power series; valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int k = 0; k < kMaxTerms; ++k) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by the modified Lentz continued fraction; valid for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

void check_dof(int dof) {
  if (dof < 1) {
    throw Error(ErrorCode::kInvalidConfig, "degrees of freedom must be >= 1");
  }
}

}  // namespace

double regularized_gamma_p(double a, double x) {
  if (x <= 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  if (x <= 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double chi_squared_cdf(int dof, double x) {
  check_dof(dof);
  return regularized_gamma_p(0.5 * dof, 0.5 * x);
}

double chi_squared_sf(int dof, double x) {
  check_dof(dof);
  return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

double chi_squared_quantile(int dof, double p) {
  check_dof(dof);
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidProbability,
                "probability must lie in (0, 1)");
  }
  // Bisect on whichever tail is small so that p near 1 keeps its accuracy.
  const bool upper = p > 0.5;
  const double target = upper ? 1.0 - p : p;
  auto below = [&](double x) {
    return upper ? chi_squared_sf(dof, x) > target
                 : chi_squared_cdf(dof, x) < target;
  };
  double lo = 0.0;
  double hi = std::max(1.0, static_cast<double>(dof));
  while (below(hi)) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 400 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (below(mid)) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace mmtest
