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

#include "mmtest/function_class.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "mmtest/error.hpp"

namespace mmtest {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no mmtest::Error thrown";
  return ErrorCode::kIoError;
}

RealFunction fn(std::vector<double> v) { return RealFunction(std::move(v)); }

TEST(LinearClassTest, EvaluatesLinearCombination) {
  const FunctionClass cls = FunctionClass::linear({fn({1, 0, -1}), fn({0, 1, 0})});
  EXPECT_EQ(cls.dimension(), 2u);
  EXPECT_EQ(cls.alphabet_size(), 3u);
  EXPECT_TRUE(cls.is_linear());
  ParameterVector r(2);
  r << 2.0, -0.5;
  const RealFunction f = cls.evaluate(r);
  EXPECT_DOUBLE_EQ(f[0], 2.0);
  EXPECT_DOUBLE_EQ(f[1], -0.5);
  EXPECT_DOUBLE_EQ(f[2], -2.0);
  EXPECT_TRUE(cls.feasible(r));
  EXPECT_TRUE(std::isinf(cls.min_margin(r)));
  EXPECT_EQ(cls.feature_gradient(r), cls.features());
}

TEST(LinearClassTest, RankChecks) {
  // psi_2 = -2 psi_1.
  EXPECT_EQ(code_of([] { FunctionClass::linear({fn({1, 0, -1}), fn({-2, 0, 2})}); }),
            ErrorCode::kRankDeficient);
  // Constant features are absorbed by the log-MGF.
  EXPECT_EQ(code_of([] { FunctionClass::linear({fn({3, 3, 3})}); }),
            ErrorCode::kRankDeficient);
  // psi_1 + psi_2 = 1.
  EXPECT_EQ(code_of([] { FunctionClass::linear({fn({1, 0, 0}), fn({0, 1, 1})}); }),
            ErrorCode::kRankDeficient);
  // Three features on three symbols: with the constant, four vectors in R^3.
  EXPECT_EQ(code_of([] {
              FunctionClass::linear({fn({1, 0, 0}), fn({0, 1, 0}), fn({0, 0, 1})});
            }),
            ErrorCode::kRankDeficient);
  EXPECT_NO_THROW(FunctionClass::linear({fn({1, 0, 0}), fn({0, 1, 0})}));
}

TEST(LinearClassTest, RankIsCheckedOnTheReferenceSupport) {
  // Independent on the full alphabet, dependent once symbol 2 is dropped.
  const std::vector<RealFunction> f = {fn({1, 0, 5}), fn({0, 1, 0})};
  EXPECT_NO_THROW(FunctionClass::linear(f));
  EXPECT_EQ(code_of([&] { FunctionClass::linear(f, make_distribution({0.5, 0.5, 0})); }),
            ErrorCode::kRankDeficient);
}

TEST(LinearClassTest, ShapeErrors) {
  EXPECT_EQ(code_of([] { FunctionClass::linear({}); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { FunctionClass::linear({fn({1, 0}), fn({0, 1, 2})}); }),
            ErrorCode::kDimensionMismatch);
  const FunctionClass cls = FunctionClass::linear({fn({1, 0, -1})});
  EXPECT_EQ(code_of([&] { cls.evaluate(ParameterVector::Zero(2)); }),
            ErrorCode::kDimensionMismatch);
}

TEST(LogLinearClassTest, CentersAndEvaluates) {
  const Distribution pi = make_distribution({0.5, 0.25, 0.25});
  const FunctionClass cls = FunctionClass::log_linear({fn({1, 2, 3})}, pi, true);
  EXPECT_EQ(cls.kind(), ClassKind::kLogLinear);
  EXPECT_FALSE(cls.is_linear());
  // Mean 1.75 removed.
  EXPECT_DOUBLE_EQ(cls.features()(0, 0), -0.75);
  EXPECT_NEAR(pi.mean(cls.feature(0)), 0.0, 1e-15);

  ParameterVector r(1);
  r << 0.5;
  const RealFunction f = cls.evaluate(r);
  EXPECT_NEAR(f[0], std::log(1 - 0.375), 1e-15);
  EXPECT_NEAR(f[2], std::log(1 + 0.625), 1e-15);
  EXPECT_NEAR(cls.min_margin(r), 0.625, 1e-15);
  const FeatureMatrix g = cls.feature_gradient(r);
  EXPECT_NEAR(g(0, 0), -0.75 / 0.625, 1e-15);
}

TEST(LogLinearClassTest, Feasibility) {
  const Distribution pi = uniform_distribution(3);
  const FunctionClass cls = FunctionClass::log_linear({fn({1, 0, -1})}, pi, false);
  ParameterVector r(1);
  r << 1.0;
  EXPECT_FALSE(cls.feasible(r));
  EXPECT_EQ(code_of([&] { cls.evaluate(r); }), ErrorCode::kInfeasibleParameter);
  EXPECT_EQ(code_of([&] { cls.feature_gradient(r); }), ErrorCode::kInfeasibleParameter);
  r << 0.999;
  EXPECT_TRUE(cls.feasible(r));
}

TEST(LogLinearClassTest, RequiresCenteredFeatures) {
  EXPECT_EQ(code_of([] {
              FunctionClass::log_linear({fn({1, 2, 3})}, uniform_distribution(3), false);
            }),
            ErrorCode::kNotCentered);
}

TEST(PartitionClassTest, IndicatorsAreLinear) {
  const FunctionClass cls = partition_class(5, {{0, 1}, {3}});
  EXPECT_EQ(cls.kind(), ClassKind::kPartition);
  EXPECT_TRUE(cls.is_linear());
  EXPECT_EQ(cls.features()(0, 1), 1.0);
  EXPECT_EQ(cls.features()(1, 3), 1.0);
  EXPECT_EQ(cls.features()(1, 2), 0.0);
}

TEST(PartitionClassTest, Errors) {
  EXPECT_EQ(code_of([] { partition_class(4, {{0, 1}, {1, 2}}); }),
            ErrorCode::kOverlappingSets);
  EXPECT_EQ(code_of([] { partition_class(4, {{0}, {}}); }), ErrorCode::kEmptySet);
  EXPECT_EQ(code_of([] { partition_class(4, {{0, 9}}); }), ErrorCode::kDimensionMismatch);
  // Sets covering the alphabet sum to the constant function.
  EXPECT_EQ(code_of([] { partition_class(3, {{0}, {1, 2}}); }),
            ErrorCode::kRankDeficient);
}

TEST(RankTest, ToleranceScalesWithFeatures) {
  FeatureMatrix m(2, 4);
  m << 1e6, 0, 0, -1e6,
       1e6, 1e-4, 0, -1e6;
  EXPECT_EQ(rank_with_constant(m, uniform_distribution(4)), 2u);
  m(1, 1) = 10.0;
  EXPECT_EQ(rank_with_constant(m, uniform_distribution(4)), 3u);
}

TEST(FeatureFileTest, ParsesAndBuilds) {
  const FeatureFile file = parse_feature_file(
      "# two features\nkind = loglinear\ncenter = true\n1 2 3\n0 1 0\n");
  EXPECT_EQ(file.kind, ClassKind::kLogLinear);
  EXPECT_TRUE(file.center);
  ASSERT_EQ(file.rows.size(), 2u);
  const FunctionClass cls = build_class(file, uniform_distribution(3));
  EXPECT_EQ(cls.kind(), ClassKind::kLogLinear);
  EXPECT_NEAR(cls.features()(0, 0), -1.0, 1e-15);

  const FunctionClass part =
      build_class(parse_feature_file("kind=partition\n1 1 0 0\n0 0 1 0\n"),
                  uniform_distribution(4));
  EXPECT_EQ(part.kind(), ClassKind::kPartition);
}

TEST(FeatureFileTest, Errors) {
  EXPECT_EQ(code_of([] { parse_feature_file("1 2 3\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_feature_file("kind=quadratic\n1 2\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_feature_file("kind=linear\n1 x 3\n"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] { parse_feature_file("kind=linear\n"); }), ErrorCode::kParseError);
  EXPECT_EQ(code_of([] {
              build_class(parse_feature_file("kind=partition\n1 0.5 0\n"),
                          uniform_distribution(3));
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(code_of([] {
              build_class(parse_feature_file("kind=linear\n1 0\n"), uniform_distribution(3));
            }),
            ErrorCode::kDimensionMismatch);
}

}  // namespace
}  // namespace mmtest
