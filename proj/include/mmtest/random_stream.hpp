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

#ifndef MMTEST_RANDOM_STREAM_HPP_
#define MMTEST_RANDOM_STREAM_HPP_

#include <array>
#include <cstdint>
#include <limits>

#include "mmtest/alphabet.hpp"

namespace mmtest {

// Counter-based generator (Philox4x32-10). The key is the 64-bit seed and the
// upper half of the 128-bit counter is the stream index, so stream(seed, i)
// for distinct i are independent and can be created in any order.
//
// Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream_index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

// Multinomial(n, pi) draw as N-1 sequential binomials. Throws
// kInvalidSampleSize for n < 1.
EmpiricalType sample_type(const Distribution& pi, std::int64_t n,
                          RandomStream& stream);

}  // namespace mmtest

#endif  // MMTEST_RANDOM_STREAM_HPP_
