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

#include "bellsim/gedanken.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "bellsim/csv.hpp"
#include "bellsim/hvsampler.hpp"
#include "parallel.hpp"

namespace bellsim {

TrialRecord simulate_trial(const GedankenConfig& config,
                           std::uint64_t trial_index) {
  if (trial_index >= config.trials) {
    throw std::out_of_range("simulate_trial: trial_index beyond config.trials");
  }
  const RandomStream stream{config.seed, trial_index};
  const HiddenVariables hv = draw_hidden_variables(stream);
  const SpinOutcome a = outcome_a(hv.lambda1());
  const SpinOutcome b =
      outcome_b_given_a(a, hv.lambda2(), config.theta_b - config.theta_a);
  const SpinOutcome b_prime =
      outcome_b_given_a(a, hv.lambda2(), config.theta_b_prime - config.theta_a);
  return {hv, a, b, b_prime};
}

namespace {

struct ProductSums {
  std::int64_t ab = 0;
  std::int64_t ab_prime = 0;
  std::int64_t bb_prime = 0;

  ProductSums& operator+=(const ProductSums& other) {
    ab += other.ab;
    ab_prime += other.ab_prime;
    bb_prime += other.bb_prime;
    return *this;
  }
};

}  // namespace

CorrelationSet run_experiment(const GedankenConfig& config, unsigned threads) {
  if (config.trials == 0) {
    throw std::invalid_argument("run_experiment: trials must be >= 1");
  }
  const auto sums = detail::reduce_trials<ProductSums>(
      config.trials, threads,
      [&config](std::uint64_t begin, std::uint64_t end) {
        ProductSums partial;
        for (std::uint64_t t = begin; t < end; ++t) {
          const TrialRecord rec = simulate_trial(config, t);
          partial.ab += rec.a * rec.b;
          partial.ab_prime += rec.a * rec.b_prime;
          partial.bb_prime += rec.b * rec.b_prime;
        }
        return partial;
      });

  const auto n = static_cast<double>(config.trials);
  CorrelationSet set(CorrelationSource::empirical);
  set.set(std::string(kLabelA), std::string(kLabelB),
          static_cast<double>(sums.ab) / n);
  set.set(std::string(kLabelA), std::string(kLabelBPrime),
          static_cast<double>(sums.ab_prime) / n);
  set.set(std::string(kLabelB), std::string(kLabelBPrime),
          static_cast<double>(sums.bb_prime) / n);
  return set;
}

double analytic_ab(Angle theta_a, Angle theta_b) {
  return -std::cos(theta_a.radians() - theta_b.radians());
}

double analytic_bb_prime(Angle theta_a, Angle theta_b, Angle theta_b_prime) {
  const double cos_b = std::cos((theta_b - theta_a).radians());
  const double cos_b_prime = std::cos((theta_b_prime - theta_a).radians());
  return 1.0 - std::fabs(cos_b - cos_b_prime);
}

CorrelationSet analytic_gedanken_correlations(Angle theta_a, Angle theta_b,
                                              Angle theta_b_prime) {
  CorrelationSet set(CorrelationSource::analytic_nonstationary);
  set.set(std::string(kLabelA), std::string(kLabelB),
          analytic_ab(theta_a, theta_b));
  set.set(std::string(kLabelA), std::string(kLabelBPrime),
          analytic_ab(theta_a, theta_b_prime));
  set.set(std::string(kLabelB), std::string(kLabelBPrime),
          analytic_bb_prime(theta_a, theta_b, theta_b_prime));
  return set;
}

namespace {
constexpr double kAnalyticEpsilon = 1e-9;
}

InequalityReport bell_lhs_gedanken(Angle theta_a, Angle theta_b,
                                   Angle theta_b_prime) {
  const double lhs =
      std::fabs(analytic_ab(theta_a, theta_b) -
                analytic_ab(theta_a, theta_b_prime)) +
      analytic_bb_prime(theta_a, theta_b, theta_b_prime);
  return make_report(InequalityForm::bell3, lhs, 1.0, kAnalyticEpsilon);
}

void write_trials_csv(std::ostream& out, const GedankenConfig& config) {
  out << "trial,lambda1,lambda2,a,b,bprime\n";
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const TrialRecord rec = simulate_trial(config, t);
    out << t << ',' << format_real(rec.hv.lambda1()) << ','
        << format_real(rec.hv.lambda2()) << ',' << (rec.a.value() > 0 ? "+1" : "-1")
        << ',' << (rec.b.value() > 0 ? "+1" : "-1") << ','
        << (rec.b_prime.value() > 0 ? "+1" : "-1") << '\n';
  }
}

}  // namespace bellsim
