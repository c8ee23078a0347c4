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

#ifndef BELLSIM_INEQ_HPP
#define BELLSIM_INEQ_HPP

#include "bellsim/core.hpp"

namespace bellsim {

/// Audit tolerances: list audits are integer-exact, so their epsilon is
/// zero; audits over real-valued correlations allow for rounding.
inline constexpr double kListAuditEpsilon = 0.0;
inline constexpr double kRealAuditEpsilon = 1e-9;

/// How the mistaken single-function extrapolation fills in the unmeasured
/// pair correlation:
///   all_pairs_negative_cosine — every pair gets -cos(difference), the
///     two-detector law applied verbatim to same-side pairs;
///   same_side_positive_cosine — same-side pairs get +cos(difference), the
///     sign that perfect anticorrelation B(theta) = -A(theta) would imply.
enum class StationaryConvention {
  all_pairs_negative_cosine,
  same_side_positive_cosine,
};

std::string_view to_string(StationaryConvention convention);

/// Joint outcome probabilities for one setting pair, plus the single-side
/// marginals. Produced under the symmetry conditions p_pp = p_mm,
/// p_pm = p_mp with uniform marginals.
struct JointProbs {
  double pp;
  double pm;
  double mp;
  double mm;
  double marginal_a;
  double marginal_b;
};

/// Three-list audit of |<ab> - <ab'>| + <bb'> <= 1, evaluated exactly in
/// integer arithmetic (epsilon 0). The bound is an arithmetic identity of
/// any three equal-length +/-1 lists, so a genuine violation is impossible;
/// if the exact check ever fails the audit throws std::logic_error, because
/// that indicates a defect in the audit itself, not a property of the data.
/// Columns are positional: a, b, b'. Throws std::invalid_argument unless
/// there are exactly three columns.
InequalityReport bell3_audit(const DataColumns& data);

/// Four-list audit of |<ab> + <ab'> + <a'b> - <a'b'>| <= 2, exact in the
/// same sense (per row, |b + b'| + |b - b'| = 2). Columns are positional:
/// a, a', b, b'. Throws std::invalid_argument unless there are exactly four
/// columns; throws std::logic_error on an impossible exact violation.
InequalityReport chsh4_audit(const DataColumns& data);

/// The stationary extrapolation's three correlations: the two measured
/// pairs get -cos(difference), the same-side pair the convention's sign.
CorrelationSet stationary_correlations(Angle theta_a, Angle theta_b,
                                       Angle theta_b_prime,
                                       StationaryConvention convention);

/// Evaluates |<AB> - <AB'>| + <BB'> under the stationary extrapolation
/// against bound 1. Unlike the constructed nonstationary sets, this is
/// violated on a nonempty window of settings.
InequalityReport stationary_lhs(Angle theta_a, Angle theta_b,
                                Angle theta_b_prime,
                                StationaryConvention convention);

/// Converts one correlation to the symmetric joint table with uniform
/// marginals: p_pp = p_mm = (1 + corr)/4, p_pm = p_mp = (1 - corr)/4.
/// Throws std::domain_error when |corr| > 1.
JointProbs correlations_to_joint(double corr);

/// Probability-form audit over four setting-pair correlations. Evaluates
/// the Clauser-Horne expression
///   p_pp(a,b) - p_pp(a,b') + p_pp(a',b) + p_pp(a',b') - P_a(a') - P_b(b)
/// against bound 0, taking the worse of the two outcome-sign labelings
/// (flipping the b-side labels replaces every p_pp with p_pm and negates
/// the correlation combination). Enumeration over deterministic local
/// assignments confirms the bound 0 is tight for this arrangement. Under
/// the symmetric uniform-marginal reduction the reported value equals
/// (|S| - 2)/4 with S = <ab> - <ab'> + <a'b> + <a'b'>, so a violation here
/// is exactly a violation of that four-correlation combination beyond 2.
InequalityReport ch_audit(double corr_ab, double corr_ab_prime,
                          double corr_a_prime_b, double corr_a_prime_b_prime);

}  // namespace bellsim

#endif  // BELLSIM_INEQ_HPP
