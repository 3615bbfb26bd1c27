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

#include "mmtest/error.hpp"

namespace mmtest {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kAllZero: return "AllZero";
    case ErrorCode::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::kAlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::kInvalidSampleSize: return "InvalidSampleSize";
    case ErrorCode::kInfeasibleParameter: return "InfeasibleParameter";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kNotCentered: return "NotCentered";
    case ErrorCode::kNotFullSupport: return "NotFullSupport";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kEtaOutOfRange: return "EtaOutOfRange";
    case ErrorCode::kUnequalSupports: return "UnequalSupports";
    case ErrorCode::kEvenAlphabet: return "EvenAlphabet";
    case ErrorCode::kEpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kNotAttained: return "NotAttained";
    case ErrorCode::kSingularCovariance: return "SingularCovariance";
  }
  return "Unknown";
}

}  // namespace mmtest
