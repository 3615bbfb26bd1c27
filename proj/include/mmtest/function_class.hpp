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

#ifndef MMTEST_FUNCTION_CLASS_HPP_
#define MMTEST_FUNCTION_CLASS_HPP_

// Parametric families {f_r : r in R^d} of functions on the alphabet.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mmtest/alphabet.hpp"

namespace mmtest {

using ParameterVector = Eigen::VectorXd;
// d x N, row i holds psi_i.
using FeatureMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                    Eigen::RowMajor>;

enum class ClassKind {
  kLinear,     // f_r = sum_i r_i psi_i
  kLogLinear,  // f_r = log(1 + r . psi), psi centered under a reference
  kPartition,  // linear with indicator features of disjoint sets
};

std::string class_kind_name(ClassKind kind);

class FunctionClass {
 public:
  // Rejects features that, together with the constant function, are linearly
  // dependent over the support of `support_reference` (the whole alphabet when
  // absent). Throws kRankDeficient, kDimensionMismatch, kNonFiniteEntry.
  static FunctionClass linear(
      std::vector<RealFunction> features,
      const std::optional<Distribution>& support_reference = std::nullopt);

  // With center = true the features are shifted by -<reference, psi_i>;
  // otherwise they must already have zero mean (kNotCentered).
  static FunctionClass log_linear(std::vector<RealFunction> features,
                                  const Distribution& reference, bool center);

  ClassKind kind() const noexcept { return kind_; }
  bool is_linear() const noexcept { return kind_ != ClassKind::kLogLinear; }
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(features_.rows());
  }
  std::size_t alphabet_size() const noexcept {
    return static_cast<std::size_t>(features_.cols());
  }
  const FeatureMatrix& features() const noexcept { return features_; }
  RealFunction feature(std::size_t i) const;
  const std::optional<Distribution>& reference() const noexcept {
    return reference_;
  }

  // min_z (1 + r . psi(z)) for log-linear classes, +inf for linear ones.
  double min_margin(const ParameterVector& r) const;

  bool feasible(const ParameterVector& r) const;
  RealFunction evaluate(const ParameterVector& r) const;
  // Rows are psi^r_i = d f_r / d r_i.
  FeatureMatrix feature_gradient(const ParameterVector& r) const;

 private:
  friend FunctionClass partition_class(
      std::size_t alphabet_size,
      const std::vector<std::vector<std::size_t>>& sets);

  FunctionClass(ClassKind kind, FeatureMatrix features,
                std::optional<Distribution> reference)
      : kind_(kind),
        features_(std::move(features)),
        reference_(std::move(reference)) {}

  void check_dimension(const ParameterVector& r) const;

  ClassKind kind_;
  FeatureMatrix features_;
  std::optional<Distribution> reference_;
};

// Indicator features of the given disjoint, nonempty symbol sets. Throws
// kOverlappingSets, kEmptySet, and kRankDeficient when the sets cover the
// alphabet (the indicators would then sum to the constant function).
FunctionClass partition_class(std::size_t alphabet_size,
                              const std::vector<std::vector<std::size_t>>& sets);

// Rank of {1, psi_1, ..., psi_d} restricted to the support of `support`,
// using column-pivoted QR with tolerance 1e-9 x the largest column norm.
std::size_t rank_with_constant(const FeatureMatrix& features,
                               const Distribution& support);

// Feature files: a `kind=linear|loglinear|partition` header, optional
// `center=true`, then d rows of N decimal values. Partition rows are 0/1
// indicators.
struct FeatureFile {
  ClassKind kind = ClassKind::kLinear;
  bool center = false;
  std::vector<RealFunction> rows;
};

FeatureFile parse_feature_file(const std::string& text);
FeatureFile read_feature_file(const std::string& path);
// Builds the class described by a feature file; `reference` is used for
// centering and rank checks.
FunctionClass build_class(const FeatureFile& file,
                          const Distribution& reference);

}  // namespace mmtest

#endif  // MMTEST_FUNCTION_CLASS_HPP_
