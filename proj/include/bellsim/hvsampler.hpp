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

#ifndef BELLSIM_HVSAMPLER_HPP
#define BELLSIM_HVSAMPLER_HPP

#include <array>
#include <cstdint>

#include "bellsim/core.hpp"

namespace bellsim {

/// Addresses one trial's randomness. Counter-based (Philox-4x32-10, Salmon
/// et al., SC 2011): each uniform is a pure function of (seed, trial_index,
/// substream), so trials may be generated in any order, on any number of
/// threads, with bit-identical results.
struct RandomStream {
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;

  /// Uniform double in [0, 1) for the given substream of this trial.
  /// Distinct substreams are statistically independent by construction.
  double uniform(std::uint32_t substream) const;

  /// One Philox-4x32 block with the standard 10 rounds. Exposed so tests
  /// can pin the published known-answer vectors.
  static std::array<std::uint32_t, 4> philox4x32(
      std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);
};

/// Substream assignments for the two-detector experiment.
inline constexpr std::uint32_t kLambda1Substream = 0;
inline constexpr std::uint32_t kLambda2Substream = 1;

/// Draws (lambda1, lambda2), each uniform on [0, 1), independent, and fully
/// determined by the stream's (seed, trial_index).
HiddenVariables draw_hidden_variables(const RandomStream& stream);

/// First-detector rule: +1 for lambda1 in [0, 0.5), -1 for lambda1 in
/// [0.5, 1]. Throws std::domain_error outside [0, 1].
SpinOutcome outcome_a(double lambda1);

/// Second-detector rule, conditioned on the first outcome through the shared
/// hidden variable. With c = cos^2(delta/2) for detector separation delta:
/// given a = +1 the outcome is -1 when lambda2 < c and +1 otherwise; given
/// a = -1 the signs reverse. Averaged over lambda2 this reproduces the
/// quantum conditional law p(b = -a) = c. The comparison is strict, matching
/// the half-open threshold intervals. Throws std::domain_error when lambda2
/// is outside [0, 1].
SpinOutcome outcome_b_given_a(SpinOutcome a, double lambda2, Angle delta);

}  // namespace bellsim

#endif  // BELLSIM_HVSAMPLER_HPP
