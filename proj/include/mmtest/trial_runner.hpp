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

#ifndef MMTEST_TRIAL_RUNNER_HPP_
#define MMTEST_TRIAL_RUNNER_HPP_

// Monte Carlo trial loops. Each trial writes a fixed-width row into a
// trials x width buffer indexed by trial number, so any reduction done
// afterwards in index order is independent of thread count and scheduling.
// The serial loop is the reference the OpenMP loop is tested against.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mmtest {

enum class Execution { kSerial, kParallel };

template <typename Kernel>
std::vector<double> run_trials_serial(std::int64_t trials, std::size_t width,
                                      Kernel&& kernel) {
  std::vector<double> out(static_cast<std::size_t>(trials) * width);
  for (std::int64_t t = 0; t < trials; ++t) {
    kernel(t, std::span<double>(out.data() + static_cast<std::size_t>(t) * width, width));
  }
  return out;
}

template <typename Kernel>
std::vector<double> run_trials_parallel(std::int64_t trials, std::size_t width,
                                        Kernel&& kernel) {
  std::vector<double> out(static_cast<std::size_t>(trials) * width);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t t = 0; t < trials; ++t) {
    try {
      kernel(t, std::span<double>(out.data() + static_cast<std::size_t>(t) * width, width));
    } catch (...) {
#pragma omp critical(mmtest_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <typename Kernel>
std::vector<double> run_trials(std::int64_t trials, std::size_t width,
                               Execution exec, Kernel&& kernel) {
  if (exec == Execution::kSerial) {
    return run_trials_serial(trials, width, std::forward<Kernel>(kernel));
  }
  return run_trials_parallel(trials, width, std::forward<Kernel>(kernel));
}

}  // namespace mmtest

#endif  // MMTEST_TRIAL_RUNNER_HPP_
