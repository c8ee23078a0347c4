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

#ifndef BELLSIM_GEDANKEN_HPP
#define BELLSIM_GEDANKEN_HPP

#include <cstdint>
#include <iosfwd>

#include "bellsim/core.hpp"

namespace bellsim {

/// Variable labels used in correlation sets produced by this module.
inline constexpr std::string_view kLabelA = "A";
inline constexpr std::string_view kLabelB = "B";
inline constexpr std::string_view kLabelBPrime = "Bprime";

/// Two-detector thought-experiment setup: fixed detector at theta_a, second
/// detector read at theta_b, and the counterfactual alternate setting
/// theta_b_prime evaluated on the same trial.
struct GedankenConfig {
  Angle theta_a;
  Angle theta_b;
  Angle theta_b_prime;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

/// Generates one trial. A comes from lambda1; B and the counterfactual
/// B' are both derived from A through the SAME lambda2, which is what makes
/// the three lists a single consistent process rather than two independent
/// experiments. Throws std::out_of_range when trial_index >= config.trials.
TrialRecord simulate_trial(const GedankenConfig& config,
                           std::uint64_t trial_index);

/// Empirical <AB>, <AB'>, <BB'> over all configured trials. Products are
/// accumulated as integers per chunk and combined, so the result is
/// identical for any thread count. Throws std::invalid_argument when
/// config.trials is zero.
CorrelationSet run_experiment(const GedankenConfig& config,
                              unsigned threads = 1);

/// Singlet pair correlation: -cos(theta_a - theta_b).
double analytic_ab(Angle theta_a, Angle theta_b);

/// Closed form for the counterfactual pair correlation:
///   1 - |cos(theta_b - theta_a) - cos(theta_b_prime - theta_a)|.
/// Label-free: symmetric under swapping theta_b and theta_b_prime, and it
/// depends on both separations from theta_a, not on theta_b - theta_b_prime
/// alone. That dependence is the nonstationarity this module demonstrates.
double analytic_bb_prime(Angle theta_a, Angle theta_b, Angle theta_b_prime);

/// All three closed-form correlations as a set
/// (source = analytic_nonstationary).
CorrelationSet analytic_gedanken_correlations(Angle theta_a, Angle theta_b,
                                              Angle theta_b_prime);

/// |<AB> - <AB'>| + <BB'> from the closed forms, against bound 1. The
/// construction saturates the bound: the lhs equals 1 for every angle
/// triple, up to rounding.
InequalityReport bell_lhs_gedanken(Angle theta_a, Angle theta_b,
                                   Angle theta_b_prime);

/// Streams all trials as CSV rows
///   trial,lambda1,lambda2,a,b,bprime
/// with outcomes as +1/-1 and lambdas at 17 significant digits.
void write_trials_csv(std::ostream& out, const GedankenConfig& config);

}  // namespace bellsim

#endif  // BELLSIM_GEDANKEN_HPP
