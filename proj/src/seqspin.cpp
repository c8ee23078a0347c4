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

#include "bellsim/seqspin.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "bellsim/hvsampler.hpp"
#include "parallel.hpp"

namespace bellsim {

double transition_prob(SpinOutcome s_from, SpinOutcome s_to, Angle delta) {
  const double stay = cos_squared_half_angle(delta);
  return s_to == s_from ? stay : 1.0 - stay;
}

namespace {

// Substreams of one trial: the initial coin and the two transition draws.
constexpr std::uint32_t kInitialSubstream = 0;
constexpr std::uint32_t kFirstTransitionSubstream = 1;
constexpr std::uint32_t kSecondTransitionSubstream = 2;

SpinOutcome step(SpinOutcome previous, double u, Angle delta) {
  return u < transition_prob(previous, previous, delta) ? previous : -previous;
}

}  // namespace

ChainRecord simulate_chain(const ChainConfig& config,
                           std::uint64_t trial_index) {
  if (trial_index >= config.trials) {
    throw std::out_of_range("simulate_chain: trial_index beyond config.trials");
  }
  const RandomStream stream{config.seed, trial_index};
  const SpinOutcome s0 = stream.uniform(kInitialSubstream) < 0.5
                             ? SpinOutcome::plus()
                             : SpinOutcome::minus();
  const SpinOutcome s1 =
      step(s0, stream.uniform(kFirstTransitionSubstream), config.theta1);
  const SpinOutcome s2 = step(s1, stream.uniform(kSecondTransitionSubstream),
                              config.theta2 - config.theta1);
  return {s0, s1, s2};
}

double joint_prob_s2_s0(SpinOutcome s2, SpinOutcome s0, Angle theta1,
                        Angle theta2) {
  double total = 0.0;
  for (const SpinOutcome s1 : {SpinOutcome::plus(), SpinOutcome::minus()}) {
    total += transition_prob(s1, s2, theta2 - theta1) *
             transition_prob(s0, s1, theta1) * 0.5;
  }
  return total;
}

CorrelationSet analytic_chain_correlations(Angle theta1, Angle theta2) {
  const double first_link = std::cos(theta1.radians());
  const double second_link = std::cos((theta2 - theta1).radians());
  CorrelationSet set(CorrelationSource::analytic_nonstationary);
  set.set(std::string(kLabelS0), std::string(kLabelS1), first_link);
  set.set(std::string(kLabelS1), std::string(kLabelS2), second_link);
  set.set(std::string(kLabelS0), std::string(kLabelS2),
          first_link * second_link);
  return set;
}

namespace {

struct ChainSums {
  std::int64_t s0s1 = 0;
  std::int64_t s1s2 = 0;
  std::int64_t s0s2 = 0;

  ChainSums& operator+=(const ChainSums& other) {
    s0s1 += other.s0s1;
    s1s2 += other.s1s2;
    s0s2 += other.s0s2;
    return *this;
  }
};

constexpr double kAnalyticEpsilon = 1e-9;

}  // namespace

CorrelationSet run_chain_experiment(const ChainConfig& config,
                                    unsigned threads) {
  if (config.trials == 0) {
    throw std::invalid_argument("run_chain_experiment: trials must be >= 1");
  }
  const auto sums = detail::reduce_trials<ChainSums>(
      config.trials, threads,
      [&config](std::uint64_t begin, std::uint64_t end) {
        ChainSums partial;
        for (std::uint64_t t = begin; t < end; ++t) {
          const ChainRecord rec = simulate_chain(config, t);
          partial.s0s1 += rec.s0 * rec.s1;
          partial.s1s2 += rec.s1 * rec.s2;
          partial.s0s2 += rec.s0 * rec.s2;
        }
        return partial;
      });

  const auto n = static_cast<double>(config.trials);
  CorrelationSet set(CorrelationSource::empirical);
  set.set(std::string(kLabelS0), std::string(kLabelS1),
          static_cast<double>(sums.s0s1) / n);
  set.set(std::string(kLabelS1), std::string(kLabelS2),
          static_cast<double>(sums.s1s2) / n);
  set.set(std::string(kLabelS0), std::string(kLabelS2),
          static_cast<double>(sums.s0s2) / n);
  return set;
}

InequalityReport bell_lhs_chain(Angle theta1, Angle theta2) {
  const CorrelationSet corr = analytic_chain_correlations(theta1, theta2);
  const double lhs = std::fabs(corr.at(kLabelS0, kLabelS1) -
                               corr.at(kLabelS0, kLabelS2)) +
                     corr.at(kLabelS1, kLabelS2);
  return make_report(InequalityForm::bell3, lhs, 1.0, kAnalyticEpsilon);
}

void write_chain_trials_csv(std::ostream& out, const ChainConfig& config) {
  out << "trial,s0,s1,s2\n";
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const ChainRecord rec = simulate_chain(config, t);
    out << t << ',' << (rec.s0.value() > 0 ? "+1" : "-1") << ','
        << (rec.s1.value() > 0 ? "+1" : "-1") << ','
        << (rec.s2.value() > 0 ? "+1" : "-1") << '\n';
  }
}

}  // namespace bellsim
