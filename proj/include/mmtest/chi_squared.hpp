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

#ifndef MMTEST_CHI_SQUARED_HPP_
#define MMTEST_CHI_SQUARED_HPP_

namespace mmtest {

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x).
// Series for x < a + 1, Lentz continued fraction otherwise.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

double chi_squared_cdf(int dof, double x);
// Upper tail 1 - CDF, accurate far into the tail.
double chi_squared_sf(int dof, double x);

// x with CDF(x) = p. Throws kInvalidProbability unless 0 < p < 1, and
// kInvalidConfig for dof < 1.
double chi_squared_quantile(int dof, double p);

}  // namespace mmtest

#endif  // MMTEST_CHI_SQUARED_HPP_
