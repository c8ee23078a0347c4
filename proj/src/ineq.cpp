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

#include "bellsim/ineq.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "bellsim/gedanken.hpp"

namespace bellsim {

std::string_view to_string(StationaryConvention convention) {
  switch (convention) {
    case StationaryConvention::all_pairs_negative_cosine:
      return "all-pairs-negative-cosine";
    case StationaryConvention::same_side_positive_cosine:
      return "same-side-positive-cosine";
  }
  throw std::logic_error("StationaryConvention: unknown value");
}

InequalityReport bell3_audit(const DataColumns& data) {
  if (data.column_count() != 3) {
    throw std::invalid_argument("bell3_audit: exactly 3 columns required");
  }
  const auto& a = data.column(0);
  const auto& b = data.column(1);
  const auto& b_prime = data.column(2);
  const std::int64_t sum_ab = outcome_product_sum(a, b);
  const std::int64_t sum_ab_prime = outcome_product_sum(a, b_prime);
  const std::int64_t sum_bb_prime = outcome_product_sum(b, b_prime);
  const auto n = static_cast<std::int64_t>(data.length());

  // N * lhs <= N, all integers: exact, no tolerance.
  const std::int64_t scaled_lhs =
      std::llabs(sum_ab - sum_ab_prime) + sum_bb_prime;
  if (scaled_lhs > n) {
    throw std::logic_error(
        "bell3_audit: exact three-list identity failed; this is an internal "
        "consistency error, not a data property");
  }
  const double lhs = static_cast<double>(scaled_lhs) / static_cast<double>(n);
  return make_report(InequalityForm::bell3, lhs, 1.0, kListAuditEpsilon);
}

InequalityReport chsh4_audit(const DataColumns& data) {
  if (data.column_count() != 4) {
    throw std::invalid_argument("chsh4_audit: exactly 4 columns required");
  }
  const auto& a = data.column(0);
  const auto& a_prime = data.column(1);
  const auto& b = data.column(2);
  const auto& b_prime = data.column(3);
  const std::int64_t combination = outcome_product_sum(a, b) +
                                   outcome_product_sum(a, b_prime) +
                                   outcome_product_sum(a_prime, b) -
                                   outcome_product_sum(a_prime, b_prime);
  const auto n = static_cast<std::int64_t>(data.length());
  const std::int64_t scaled_lhs = std::llabs(combination);
  if (scaled_lhs > 2 * n) {
    throw std::logic_error(
        "chsh4_audit: exact four-list identity failed; this is an internal "
        "consistency error, not a data property");
  }
  const double lhs = static_cast<double>(scaled_lhs) / static_cast<double>(n);
  return make_report(InequalityForm::chsh4, lhs, 2.0, kListAuditEpsilon);
}

CorrelationSet stationary_correlations(Angle theta_a, Angle theta_b,
                                       Angle theta_b_prime,
                                       StationaryConvention convention) {
  const double same_side_sign =
      convention == StationaryConvention::all_pairs_negative_cosine ? -1.0
                                                                    : 1.0;
  CorrelationSet set(CorrelationSource::stationary_assumed);
  set.set(std::string(kLabelA), std::string(kLabelB),
          -std::cos((theta_a - theta_b).radians()));
  set.set(std::string(kLabelA), std::string(kLabelBPrime),
          -std::cos((theta_a - theta_b_prime).radians()));
  set.set(std::string(kLabelB), std::string(kLabelBPrime),
          same_side_sign * std::cos((theta_b - theta_b_prime).radians()));
  return set;
}

InequalityReport stationary_lhs(Angle theta_a, Angle theta_b,
                                Angle theta_b_prime,
                                StationaryConvention convention) {
  const CorrelationSet corr =
      stationary_correlations(theta_a, theta_b, theta_b_prime, convention);
  const double lhs =
      std::fabs(corr.at(kLabelA, kLabelB) - corr.at(kLabelA, kLabelBPrime)) +
      corr.at(kLabelB, kLabelBPrime);
  return make_report(InequalityForm::bell3, lhs, 1.0, kRealAuditEpsilon);
}

JointProbs correlations_to_joint(double corr) {
  if (!(std::fabs(corr) <= 1.0)) {
    throw std::domain_error("correlations_to_joint: |corr| must be <= 1");
  }
  const double aligned = (1.0 + corr) / 4.0;
  const double opposed = (1.0 - corr) / 4.0;
  return {aligned, opposed, opposed, aligned, 0.5, 0.5};
}

InequalityReport ch_audit(double corr_ab, double corr_ab_prime,
                          double corr_a_prime_b,
                          double corr_a_prime_b_prime) {
  const JointProbs j_ab = correlations_to_joint(corr_ab);
  const JointProbs j_ab_prime = correlations_to_joint(corr_ab_prime);
  const JointProbs j_a_prime_b = correlations_to_joint(corr_a_prime_b);
  const JointProbs j_a_prime_b_prime =
      correlations_to_joint(corr_a_prime_b_prime);

  const double marginals = j_a_prime_b.marginal_a + j_ab.marginal_b;
  // Canonical arrangement, then the same expression with the b-side outcome
  // labels flipped (p_pp -> p_pm); the audit reports the worse of the two.
  const double ch_as_labeled = j_ab.pp - j_ab_prime.pp + j_a_prime_b.pp +
                               j_a_prime_b_prime.pp - marginals;
  const double ch_relabeled = j_ab.pm - j_ab_prime.pm + j_a_prime_b.pm +
                              j_a_prime_b_prime.pm - marginals;
  const double lhs = std::fmax(ch_as_labeled, ch_relabeled);
  return make_report(InequalityForm::ch, lhs, 0.0, kRealAuditEpsilon);
}

}  // namespace bellsim
