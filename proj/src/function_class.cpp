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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "mmtest/error.hpp"

namespace mmtest {

namespace {

FeatureMatrix to_matrix(const std::vector<RealFunction>& features) {
  if (features.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "class needs at least one feature");
  }
  const std::size_t alphabet = features.front().size();
  if (alphabet == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "features have length 0");
  }
  FeatureMatrix m(features.size(), alphabet);
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].size() != alphabet) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "feature " + std::to_string(i) + " has length " +
                      std::to_string(features[i].size()) + ", expected " +
                      std::to_string(alphabet));
    }
    for (std::size_t z = 0; z < alphabet; ++z) m(i, z) = features[i][z];
  }
  return m;
}

void require_full_rank(const FeatureMatrix& features, const Distribution& support) {
  const std::size_t rank = rank_with_constant(features, support);
  if (rank < static_cast<std::size_t>(features.rows()) + 1) {
    throw Error(ErrorCode::kRankDeficient,
                "features and the constant function span only " +
                    std::to_string(rank) + " of " +
                    std::to_string(features.rows() + 1) +
                    " dimensions over the support");
  }
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string class_kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::kLinear: return "linear";
    case ClassKind::kLogLinear: return "loglinear";
    case ClassKind::kPartition: return "partition";
  }
  return "unknown";
}

std::size_t rank_with_constant(const FeatureMatrix& features,
                               const Distribution& support) {
  if (static_cast<std::size_t>(features.cols()) != support.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature length differs from the alphabet size");
  }
  std::vector<Eigen::Index> symbols;
  for (std::size_t z = 0; z < support.size(); ++z) {
    if (support[z] > 0.0) symbols.push_back(static_cast<Eigen::Index>(z));
  }
  // Columns: the constant function and each feature, restricted to the support.
  Eigen::MatrixXd a(static_cast<Eigen::Index>(symbols.size()), features.rows() + 1);
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    a(k, 0) = 1.0;
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
      a(k, i + 1) = features(i, symbols[static_cast<std::size_t>(k)]);
    }
  }
  const double largest = a.colwise().norm().maxCoeff();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  // The constant column keeps maxPivot() positive.
  qr.setThreshold(1e-9 * largest / qr.maxPivot());
  return static_cast<std::size_t>(qr.rank());
}

FunctionClass FunctionClass::linear(
    std::vector<RealFunction> features,
    const std::optional<Distribution>& support_reference) {
  FeatureMatrix m = to_matrix(features);
  const Distribution support =
      support_reference ? *support_reference
                        : uniform_distribution(static_cast<std::size_t>(m.cols()));
  if (support.size() != static_cast<std::size_t>(m.cols())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "reference alphabet differs from the feature length");
  }
  require_full_rank(m, support);
  return FunctionClass(ClassKind::kLinear, std::move(m), support_reference);
}

FunctionClass FunctionClass::log_linear(std::vector<RealFunction> features,
                                        const Distribution& reference,
                                        bool center) {
  FeatureMatrix m = to_matrix(features);
  if (reference.size() != static_cast<std::size_t>(m.cols())) {
    throw Error(ErrorCode::kDimensionMismatch,
                "reference alphabet differs from the feature length");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double mean = reference.mean(std::span<const double>(
        m.row(i).data(), static_cast<std::size_t>(m.cols())));
    if (center) {
      m.row(i).array() -= mean;
    } else if (std::abs(mean) > 1e-10) {
      throw Error(ErrorCode::kNotCentered,
                  "feature " + std::to_string(i) + " has mean " +
                      std::to_string(mean) + " under the reference");
    }
  }
  require_full_rank(m, reference);
  return FunctionClass(ClassKind::kLogLinear, std::move(m), reference);
}

FunctionClass partition_class(std::size_t alphabet_size,
                              const std::vector<std::vector<std::size_t>>& sets) {
  if (sets.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "no sets given");
  }
  std::set<std::size_t> seen;
  FeatureMatrix m = FeatureMatrix::Zero(static_cast<Eigen::Index>(sets.size()),
                                        static_cast<Eigen::Index>(alphabet_size));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) {
      throw Error(ErrorCode::kEmptySet, "set " + std::to_string(i) + " is empty");
    }
    for (std::size_t z : sets[i]) {
      if (z >= alphabet_size) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "symbol " + std::to_string(z) + " outside the alphabet");
      }
      if (!seen.insert(z).second) {
        throw Error(ErrorCode::kOverlappingSets,
                    "symbol " + std::to_string(z) + " appears twice");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(z)) = 1.0;
    }
  }
  require_full_rank(m, uniform_distribution(alphabet_size));
  return FunctionClass(ClassKind::kPartition, std::move(m), std::nullopt);
}

RealFunction FunctionClass::feature(std::size_t i) const {
  const auto row = features_.row(static_cast<Eigen::Index>(i));
  return RealFunction(std::vector<double>(row.data(), row.data() + row.size()));
}

void FunctionClass::check_dimension(const ParameterVector& r) const {
  if (static_cast<std::size_t>(r.size()) != dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "parameter has dimension " + std::to_string(r.size()) +
                    ", class has " + std::to_string(dimension()));
  }
  if (!r.allFinite()) {
    throw Error(ErrorCode::kNonFiniteEntry, "parameter is not finite");
  }
}

double FunctionClass::min_margin(const ParameterVector& r) const {
  check_dimension(r);
  if (is_linear()) return std::numeric_limits<double>::infinity();
  return 1.0 + (features_.transpose() * r).minCoeff();
}

bool FunctionClass::feasible(const ParameterVector& r) const {
  return min_margin(r) > 0.0;
}

RealFunction FunctionClass::evaluate(const ParameterVector& r) const {
  check_dimension(r);
  Eigen::VectorXd f = features_.transpose() * r;
  if (!is_linear()) {
    if (1.0 + f.minCoeff() <= 0.0) {
      throw Error(ErrorCode::kInfeasibleParameter,
                  "1 + r . psi(z) is not positive for some z");
    }
    f = (1.0 + f.array()).log();
  }
  return RealFunction(std::vector<double>(f.data(), f.data() + f.size()));
}

FeatureMatrix FunctionClass::feature_gradient(const ParameterVector& r) const {
  check_dimension(r);
  if (is_linear()) return features_;
  const Eigen::RowVectorXd margin =
      (1.0 + (features_.transpose() * r).array()).matrix().transpose();
  if (margin.minCoeff() <= 0.0) {
    throw Error(ErrorCode::kInfeasibleParameter,
                "1 + r . psi(z) is not positive for some z");
  }
  FeatureMatrix g = features_;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    g.row(i).array() /= margin.array();
  }
  return g;
}

FeatureFile parse_feature_file(const std::string& text) {
  FeatureFile file;
  std::istringstream in(text);
  std::string line;
  bool have_kind = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "kind") {
        if (value == "linear") file.kind = ClassKind::kLinear;
        else if (value == "loglinear") file.kind = ClassKind::kLogLinear;
        else if (value == "partition") file.kind = ClassKind::kPartition;
        else throw Error(ErrorCode::kParseError, "unknown kind '" + value + "'");
        have_kind = true;
      } else if (key == "center") {
        if (value != "true" && value != "false") {
          throw Error(ErrorCode::kParseError, "center must be true or false");
        }
        file.center = value == "true";
      } else {
        throw Error(ErrorCode::kParseError, "unknown header key '" + key + "'");
      }
      continue;
    }
    std::vector<double> row;
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_no) + ": bad value '" + token + "'");
      }
      row.push_back(v);
    }
    file.rows.emplace_back(std::move(row));
  }
  if (!have_kind) throw Error(ErrorCode::kParseError, "missing kind= header");
  if (file.rows.empty()) throw Error(ErrorCode::kParseError, "no feature rows");
  return file;
}

FeatureFile read_feature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_feature_file(buffer.str());
}

FunctionClass build_class(const FeatureFile& file, const Distribution& reference) {
  switch (file.kind) {
    case ClassKind::kLinear:
      return FunctionClass::linear(file.rows, reference);
    case ClassKind::kLogLinear:
      return FunctionClass::log_linear(file.rows, reference, file.center);
    case ClassKind::kPartition: {
      std::vector<std::vector<std::size_t>> sets;
      for (const RealFunction& row : file.rows) {
        std::vector<std::size_t> set;
        for (std::size_t z = 0; z < row.size(); ++z) {
          if (row[z] == 1.0) set.push_back(z);
          else if (row[z] != 0.0) {
            throw Error(ErrorCode::kParseError, "partition rows must be 0/1");
          }
        }
        sets.push_back(std::move(set));
      }
      return partition_class(reference.size(), sets);
    }
  }
  throw Error(ErrorCode::kParseError, "unknown class kind");
}

}  // namespace mmtest
