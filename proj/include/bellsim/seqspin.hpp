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

#ifndef BELLSIM_SEQSPIN_HPP
#define BELLSIM_SEQSPIN_HPP

#include <cstdint>
#include <iosfwd>

#include "bellsim/core.hpp"

namespace bellsim {

inline constexpr std::string_view kLabelS0 = "s0";
inline constexpr std::string_view kLabelS1 = "s1";
inline constexpr std::string_view kLabelS2 = "s2";

/// Three successive spin measurements on one particle: the first at angle 0
/// on a maximally mixed particle, then at theta1 and theta2. Outcomes form a
/// two-step Markov chain.
struct ChainConfig {
  Angle theta1;
  Angle theta2;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

/// One-step transition law: cos^2(delta/2) to repeat the previous outcome,
/// sin^2(delta/2) to flip it, for detector separation delta.
double transition_prob(SpinOutcome s_from, SpinOutcome s_to, Angle delta);

/// Generates one chain trial from three independent uniforms: s0 is a fair
/// coin, s1 follows the transition law over theta1 - 0, s2 over
/// theta2 - theta1. Throws std::out_of_range if trial_index >= trials.
ChainRecord simulate_chain(const ChainConfig& config,
                           std::uint64_t trial_index);

/// Joint probability p(s2, s0) obtained by summing the three-outcome chain
/// law over the middle outcome s1.
double joint_prob_s2_s0(SpinOutcome s2, SpinOutcome s0, Angle theta1,
                        Angle theta2);

/// Closed-form chain correlations (source = analytic_nonstationary):
///   <s0 s1> = cos(theta1)
///   <s1 s2> = cos(theta2 - theta1)
///   <s0 s2> = cos(theta1) * cos(theta2 - theta1)
/// The endpoint correlation is a product over the links, not a function of
/// theta2 alone — the chain is nonstationary in angle.
CorrelationSet analytic_chain_correlations(Angle theta1, Angle theta2);

/// Empirical chain correlations over all configured trials; integer
/// accumulation, thread-count independent. Throws std::invalid_argument
/// when trials is zero.
CorrelationSet run_chain_experiment(const ChainConfig& config,
                                    unsigned threads = 1);

/// |<s0 s1> - <s0 s2>| + <s1 s2> against bound 1. The margin equals
/// 2 sin^2((theta2 - theta1)/2) (1 - |cos theta1|), which is never negative.
InequalityReport bell_lhs_chain(Angle theta1, Angle theta2);

/// Streams all trials as CSV rows: trial,s0,s1,s2 with outcomes as +1/-1.
void write_chain_trials_csv(std::ostream& out, const ChainConfig& config);

}  // namespace bellsim

#endif  // BELLSIM_SEQSPIN_HPP
