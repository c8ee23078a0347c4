// Copyright 2026 The bellsim authors
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

#include "bellsim/hvsampler.hpp"

namespace bellsim {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& counter,
                         const std::array<std::uint32_t, 2>& key) {
  const std::uint64_t product0 =
      static_cast<std::uint64_t>(kPhiloxM0) * counter[0];
  const std::uint64_t product1 =
      static_cast<std::uint64_t>(kPhiloxM1) * counter[2];
  const auto hi0 = static_cast<std::uint32_t>(product0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(product0);
  const auto hi1 = static_cast<std::uint32_t>(product1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(product1);
  counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> RandomStream::philox4x32(
    std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(counter, key);
    if (round != 9) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
  }
  return counter;
}

double RandomStream::uniform(std::uint32_t substream) const {
  const std::array<std::uint32_t, 4> counter = {
      static_cast<std::uint32_t>(trial_index),
      static_cast<std::uint32_t>(trial_index >> 32), substream, 0u};
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const auto block = philox4x32(counter, key);
  const std::uint64_t bits =
      (static_cast<std::uint64_t>(block[0]) << 32) | block[1];
  // Top 53 bits scaled by 2^-53: uniform on [0, 1), never exactly 1.
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

HiddenVariables draw_hidden_variables(const RandomStream& stream) {
  return {stream.uniform(kLambda1Substream), stream.uniform(kLambda2Substream)};
}

SpinOutcome outcome_a(double lambda1) {
  if (!(lambda1 >= 0.0 && lambda1 <= 1.0)) {
    throw std::domain_error("outcome_a: lambda1 must lie in [0, 1]");
  }
  return lambda1 < 0.5 ? SpinOutcome::plus() : SpinOutcome::minus();
}

SpinOutcome outcome_b_given_a(SpinOutcome a, double lambda2, Angle delta) {
  if (!(lambda2 >= 0.0 && lambda2 <= 1.0)) {
    throw std::domain_error("outcome_b_given_a: lambda2 must lie in [0, 1]");
  }
  const bool anti = lambda2 < cos_squared_half_angle(delta);
  return anti ? -a : a;
}

}  // namespace bellsim
