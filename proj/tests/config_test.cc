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

#include "mmtest/config.hpp"

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

TEST(ConfigTest, Defaults) {
  const ExperimentConfig roc = default_config(Experiment::kRoc);
  EXPECT_EQ(roc.alphabet_size, 19);
  EXPECT_EQ(roc.sample_sizes, std::vector<std::int64_t>{40});
  EXPECT_EQ(roc.dimensions, (std::vector<int>{1, 5, 10, 18}));
  EXPECT_EQ(roc.trials, 100000);
  EXPECT_EQ(default_config(Experiment::kFig1).trials, 1000000);
  EXPECT_EQ(default_config(Experiment::kCodelength).epsilon, 0.05);
  for (Experiment e : {Experiment::kFig1, Experiment::kRoc, Experiment::kNullStats,
                       Experiment::kAltStats, Experiment::kCodelength}) {
    EXPECT_NO_THROW(default_config(e).validate());
    EXPECT_EQ(parse_experiment(experiment_name(e)), e);
  }
}

TEST(ConfigTest, ParsesKeyValueText) {
  const ExperimentConfig c = parse_config(
      "# ROC run\n"
      "experiment = roc\n"
      "N = 7\n"
      "n = 40, 80\n"
      "d = 1, 3\n"
      "trials = 500\n"
      "seed = 99\n"
      "p_fa_grid = 0.1, 0.2\n"
      "include_llr = false\n"
      "pi0 = 1, 1, 1, 1, 1, 1, 2\n");
  EXPECT_EQ(c.experiment, Experiment::kRoc);
  EXPECT_EQ(c.alphabet_size, 7);
  EXPECT_EQ(c.sample_sizes, (std::vector<std::int64_t>{40, 80}));
  EXPECT_EQ(c.dimensions, (std::vector<int>{1, 3}));
  EXPECT_EQ(c.trials, 500);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.p_fa_grid, (std::vector<double>{0.1, 0.2}));
  EXPECT_FALSE(c.include_llr);
  EXPECT_EQ(c.pi0.back(), 2.0);
}

TEST(ConfigTest, EchoRoundTrips) {
  ExperimentConfig c = default_config(Experiment::kCodelength);
  c.sample_sizes = {100, 4000};
  c.epsilon = 0.01;
  std::string text;
  for (const std::string& line : c.echo()) text += line + "\n";
  const ExperimentConfig back = parse_config(text);
  EXPECT_EQ(back.sample_sizes, c.sample_sizes);
  EXPECT_EQ(back.epsilon, c.epsilon);
  EXPECT_EQ(back.echo(), c.echo());
}

TEST(ConfigTest, FallbackExperiment) {
  EXPECT_EQ(parse_config("N = 6\n", Experiment::kCodelength).alphabet_size, 6);
  EXPECT_EQ(code_of([] { parse_config("N = 6\n"); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([] { parse_config("experiment = roc\n", Experiment::kFig1); }),
            ErrorCode::kInvalidConfig);
}

TEST(ConfigTest, Errors) {
  const auto e = Experiment::kFig1;
  EXPECT_EQ(code_of([&] { parse_config("colour = red\n", e); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([&] { parse_config("N = 5\nN = 6\n", e); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([&] { parse_config("N = five\n", e); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([&] { parse_config("trials = 0\n", e); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([&] { parse_config("N = 1\n", e); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([&] { parse_config("p_fa_grid = 0.1, 1.5\n", e); }),
            ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([&] { parse_config("just text\n", e); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([] { parse_config("experiment = fig9\n"); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([] { parse_config("d = 1, 19\n", Experiment::kRoc); }),
            ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([] { read_config("/nonexistent/x.cfg"); }), ErrorCode::kIoError);
}

}  // namespace
}  // namespace mmtest
