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

#include "mmtest/random_stream.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mmtest/error.hpp"

namespace mmtest {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index) {}

void RandomStream::refill() {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed_),
                                            static_cast<std::uint32_t>(seed_ >> 32)};
  buffer_ = philox4x32_10(ctr, key);
  ++block_;
  used_ = 0;
}

RandomStream::result_type RandomStream::operator()() {
  if (used_ > 2) refill();
  const std::uint64_t value =
      (static_cast<std::uint64_t>(buffer_[used_]) << 32) | buffer_[used_ + 1];
  used_ += 2;
  return value;
}

double RandomStream::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
  // 1 - u lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

EmpiricalType sample_type(const Distribution& pi, std::int64_t n,
                          RandomStream& stream) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidSampleSize,
                "sample size " + std::to_string(n) + " < 1");
  }
  const std::size_t alphabet = pi.size();
  std::vector<std::int64_t> counts(alphabet, 0);
  std::int64_t remaining = n;
  double remaining_mass = 1.0;
  for (std::size_t z = 0; z + 1 < alphabet && remaining > 0; ++z) {
    const double w = pi[z];
    if (w <= 0.0) continue;
    const double p = remaining_mass > 0.0 ? std::min(1.0, w / remaining_mass) : 1.0;
    std::int64_t k = remaining;
    if (p < 1.0) {
      std::binomial_distribution<std::int64_t> binomial(remaining, p);
      k = binomial(stream);
    }
    counts[z] = k;
    remaining -= k;
    remaining_mass -= w;
  }
  if (remaining > 0) {
    // The last symbol with positive mass takes the remainder.
    std::size_t last = alphabet;
    while (last > 0 && pi[last - 1] <= 0.0) --last;
    counts[last - 1] += remaining;
  }
  return EmpiricalType(std::move(counts));
}

}  // namespace mmtest
