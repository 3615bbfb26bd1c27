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

#include "mmtest/alphabet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mmtest/error.hpp"

namespace mmtest {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "alphabet sizes " + std::to_string(a) + " and " +
                    std::to_string(b) + " differ");
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

RealFunction::RealFunction(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteEntry, "function value is not finite");
    }
  }
}

RealFunction RealFunction::zeros(std::size_t alphabet_size) {
  return RealFunction(std::vector<double>(alphabet_size, 0.0));
}

RealFunction RealFunction::shifted(double c) const {
  std::vector<double> out(values_);
  for (double& v : out) v += c;
  return RealFunction(std::move(out));
}

bool Distribution::full_support() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](double w) { return w > 0.0; });
}

std::size_t Distribution::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      weights_.begin(), weights_.end(), [](double w) { return w > 0.0; }));
}

bool Distribution::same_support(const Distribution& other) const noexcept {
  if (size() != other.size()) return false;
  for (std::size_t z = 0; z < size(); ++z) {
    if ((weights_[z] > 0.0) != (other.weights_[z] > 0.0)) return false;
  }
  return true;
}

double Distribution::mean(const RealFunction& f) const {
  return mean(f.values());
}

double Distribution::mean(std::span<const double> f) const {
  require_same_size(size(), f.size());
  double acc = 0.0;
  for (std::size_t z = 0; z < size(); ++z) {
    if (weights_[z] > 0.0) acc += weights_[z] * f[z];
  }
  return acc;
}

Distribution make_distribution(std::vector<double> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::kAllZero, "empty weight vector");
  }
  for (double w : weights) {
    if (!std::isfinite(w)) {
      throw Error(ErrorCode::kNonFiniteEntry, "weight is not finite");
    }
    if (w < 0.0) {
      throw Error(ErrorCode::kNegativeWeight, "weight " + std::to_string(w));
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kAllZero, "all weights are zero");
  }
  for (double& w : weights) w /= total;
  return Distribution(std::move(weights));
}

Distribution uniform_distribution(std::size_t alphabet_size) {
  return make_distribution(std::vector<double>(alphabet_size, 1.0));
}

Distribution point_mass(std::size_t alphabet_size, std::size_t z) {
  std::vector<double> w(alphabet_size, 0.0);
  w.at(z) = 1.0;
  return make_distribution(std::move(w));
}

EmpiricalType::EmpiricalType(std::vector<std::int64_t> counts)
    : counts_(std::move(counts)) {
  for (std::int64_t c : counts_) {
    if (c < 0) {
      throw Error(ErrorCode::kInvalidSampleSize, "negative count");
    }
    n_ += c;
  }
  if (n_ <= 0) {
    throw Error(ErrorCode::kInvalidSampleSize, "type has no observations");
  }
}

Distribution EmpiricalType::as_distribution() const {
  std::vector<double> w(counts_.size());
  const double n = static_cast<double>(n_);
  for (std::size_t z = 0; z < counts_.size(); ++z) {
    w[z] = static_cast<double>(counts_[z]) / n;
  }
  return make_distribution(std::move(w));
}

double kl_divergence(std::span<const double> nu1, std::span<const double> nu2) {
  require_same_size(nu1.size(), nu2.size());
  double acc = 0.0;
  for (std::size_t z = 0; z < nu1.size(); ++z) {
    if (nu1[z] <= 0.0) continue;
    if (nu2[z] <= 0.0) return kInfiniteDivergence;
    acc += nu1[z] * std::log(nu1[z] / nu2[z]);
  }
  // Rounding can leave tiny negative sums for nearly equal arguments.
  return std::max(acc, 0.0);
}

double kl_divergence(const Distribution& nu1, const Distribution& nu2) {
  return kl_divergence(nu1.weights(), nu2.weights());
}

double entropy(const Distribution& pi) {
  double acc = 0.0;
  for (double w : pi.weights()) {
    if (w > 0.0) acc -= w * std::log(w);
  }
  return acc;
}

double log_mgf(std::span<const double> pi, std::span<const double> f) {
  require_same_size(pi.size(), f.size());
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t z = 0; z < pi.size(); ++z) {
    if (pi[z] > 0.0) m = std::max(m, f[z]);
  }
  double acc = 0.0;
  for (std::size_t z = 0; z < pi.size(); ++z) {
    if (pi[z] > 0.0) acc += pi[z] * std::exp(f[z] - m);
  }
  return m + std::log(acc);
}

double log_mgf(const Distribution& pi, const RealFunction& f) {
  return log_mgf(pi.weights(), f.values());
}

Distribution twisted(const Distribution& pi, const RealFunction& f) {
  require_same_size(pi.size(), f.size());
  const double lambda = log_mgf(pi, f);
  std::vector<double> w(pi.size(), 0.0);
  for (std::size_t z = 0; z < pi.size(); ++z) {
    if (pi[z] > 0.0) w[z] = pi[z] * std::exp(f[z] - lambda);
  }
  return make_distribution(std::move(w));
}

Distribution parse_distribution(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> weights;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(line, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || !trim(line.substr(used)).empty()) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": '" + line + "'");
    }
    weights.push_back(w);
  }
  return make_distribution(std::move(weights));
}

Distribution read_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_distribution(buffer.str());
}

void write_distribution(const std::string& path, const Distribution& pi) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.precision(17);
  for (double w : pi.weights()) out << w << '\n';
}

}  // namespace mmtest
