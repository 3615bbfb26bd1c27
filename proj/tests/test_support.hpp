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

#ifndef MMTEST_TESTS_TEST_SUPPORT_HPP_
#define MMTEST_TESTS_TEST_SUPPORT_HPP_

// Random instance generators shared by the unit and acceptance tests.

#include <cmath>
#include <vector>

#include "mmtest/alphabet.hpp"
#include "mmtest/error.hpp"
#include "mmtest/function_class.hpp"
#include "mmtest/random_stream.hpp"

namespace mmtest::testing {

// Dirichlet(1, ..., 1) draw, floored at `floor` before normalizing.
inline Distribution random_distribution(std::size_t n, RandomStream& s,
                                        double floor = 0.0) {
  std::vector<double> w(n);
  for (double& x : w) x = floor - std::log(1.0 - s.uniform());
  return make_distribution(w);
}

inline RealFunction random_function(std::size_t n, RandomStream& s, double scale = 1.0) {
  std::vector<double> v(n);
  for (double& x : v) x = scale * s.normal();
  return RealFunction(v);
}

// d Gaussian features; independence with the constant holds almost surely
// when d < n and is checked by the class constructor.
inline FunctionClass random_linear_class(std::size_t n, std::size_t d, RandomStream& s) {
  std::vector<RealFunction> f;
  for (std::size_t i = 0; i < d; ++i) f.push_back(random_function(n, s));
  return FunctionClass::linear(f);
}

inline FunctionClass random_log_linear_class(const Distribution& pi, std::size_t d,
                                             RandomStream& s) {
  std::vector<RealFunction> f;
  for (std::size_t i = 0; i < d; ++i) f.push_back(random_function(pi.size(), s));
  return FunctionClass::log_linear(f, pi, true);
}

// A feasible parameter for a log-linear class: a random direction scaled so
// that min_z (1 + r . psi(z)) = 1 - shrink.
inline ParameterVector random_feasible(const FunctionClass& cls, RandomStream& s,
                                       double scale = 0.5, double shrink = 0.6) {
  ParameterVector r(static_cast<Eigen::Index>(cls.dimension()));
  for (Eigen::Index i = 0; i < r.size(); ++i) r[i] = scale * s.normal();
  if (!cls.is_linear()) {
    const double low = (cls.features().transpose() * r).minCoeff();
    if (low < 0.0) r *= shrink / -low;
  }
  return r;
}

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIoError;  // sentinel: nothing thrown
}

}  // namespace mmtest::testing

#endif  // MMTEST_TESTS_TEST_SUPPORT_HPP_
