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

#ifndef MMTEST_ERROR_HPP_
#define MMTEST_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmtest {

enum class ErrorCode {
  // Validation errors (CLI exit code 1).
  kNegativeWeight,
  kAllZero,
  kNonFiniteEntry,
  kAlphabetMismatch,
  kInvalidSampleSize,
  kInfeasibleParameter,
  kDimensionMismatch,
  kOverlappingSets,
  kEmptySet,
  kRankDeficient,
  kNotCentered,
  kNotFullSupport,
  kInvalidProbability,
  kEtaOutOfRange,
  kUnequalSupports,
  kEvenAlphabet,
  kEpsilonTooLarge,
  kInvalidConfig,
  kParseError,
  kIoError,
  // Numerical failures (CLI exit code 2).
  kNotAttained,
  kSingularCovariance,
};

std::string_view error_code_name(ErrorCode code);

// True for the codes that report a numerical failure rather than bad input.
constexpr bool is_numerical_failure(ErrorCode code) {
  return code == ErrorCode::kNotAttained ||
         code == ErrorCode::kSingularCovariance;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mmtest

#endif  // MMTEST_ERROR_HPP_
