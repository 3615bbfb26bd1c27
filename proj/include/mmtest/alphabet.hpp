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

#ifndef MMTEST_ALPHABET_HPP_
#define MMTEST_ALPHABET_HPP_

// Probability primitives over a finite alphabet {0, ..., N-1}.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace mmtest {

inline constexpr double kInfiniteDivergence =
    std::numeric_limits<double>::infinity();

// A real-valued function on the alphabet. Entries are always finite.
class RealFunction {
 public:
  RealFunction() = default;
  explicit RealFunction(std::vector<double> values);
  static RealFunction zeros(std::size_t alphabet_size);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t z) const { return values_[z]; }
  std::span<const double> values() const noexcept { return values_; }

  // Pointwise f + c.
  RealFunction shifted(double c) const;

  friend bool operator==(const RealFunction&, const RealFunction&) = default;

 private:
  std::vector<double> values_;
};

// Probability vector; weights are nonnegative and sum to one.
class Distribution {
 public:
  Distribution() = default;

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t z) const { return weights_[z]; }
  std::span<const double> weights() const noexcept { return weights_; }

  bool full_support() const noexcept;
  std::size_t support_size() const noexcept;
  // Same set of symbols with positive mass.
  bool same_support(const Distribution& other) const noexcept;

  // <pi, f>.
  double mean(const RealFunction& f) const;
  double mean(std::span<const double> f) const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  friend Distribution make_distribution(std::vector<double> weights);
  explicit Distribution(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::vector<double> weights_;
};

// Validates and normalizes nonnegative weights. Throws kNegativeWeight,
// kAllZero or kNonFiniteEntry.
Distribution make_distribution(std::vector<double> weights);

Distribution uniform_distribution(std::size_t alphabet_size);
Distribution point_mass(std::size_t alphabet_size, std::size_t z);

// Histogram of n observations.
class EmpiricalType {
 public:
  EmpiricalType() = default;
  // Throws kInvalidSampleSize when the counts sum to zero.
  explicit EmpiricalType(std::vector<std::int64_t> counts);

  std::size_t size() const noexcept { return counts_.size(); }
  std::int64_t n() const noexcept { return n_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  Distribution as_distribution() const;

  friend bool operator==(const EmpiricalType&, const EmpiricalType&) = default;

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t n_ = 0;
};

// D(nu1 || nu2) in nats, with 0 log 0 = 0. Returns kInfiniteDivergence when
// nu1 is not absolutely continuous with respect to nu2.
double kl_divergence(const Distribution& nu1, const Distribution& nu2);
double kl_divergence(std::span<const double> nu1, std::span<const double> nu2);

double entropy(const Distribution& pi);

// log <pi, exp f>, evaluated with a max shift. Only symbols in the support of
// pi contribute.
double log_mgf(const Distribution& pi, const RealFunction& f);
double log_mgf(std::span<const double> pi, std::span<const double> f);

// pi * exp(f - log_mgf(pi, f)).
Distribution twisted(const Distribution& pi, const RealFunction& f);

// Plain-text distribution files: one decimal weight per line, '#' comments.
Distribution read_distribution(const std::string& path);
Distribution parse_distribution(const std::string& text);
void write_distribution(const std::string& path, const Distribution& pi);

}  // namespace mmtest

#endif  // MMTEST_ALPHABET_HPP_
