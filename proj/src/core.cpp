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

#include "bellsim/core.hpp"

#include <cmath>
#include <numbers>

namespace bellsim {

Angle::Angle(double radians) : radians_(radians) {
  if (!std::isfinite(radians)) {
    throw std::domain_error("Angle: radians must be finite");
  }
}

Angle Angle::from_degrees(double degrees) {
  return Angle(degrees * std::numbers::pi / 180.0);
}

Angle Angle::normalized() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(radians_, two_pi);
  if (r < 0.0) {
    r += two_pi;
  }
  if (r >= two_pi) {  // fmod rounding can leave r == two_pi
    r = 0.0;
  }
  return Angle(r);
}

double cos_squared_half_angle(Angle delta) {
  return (1.0 + std::cos(delta.radians())) / 2.0;
}

HiddenVariables::HiddenVariables(double lambda1, double lambda2)
    : lambda1_(lambda1), lambda2_(lambda2) {
  if (!(lambda1 >= 0.0 && lambda1 <= 1.0) ||
      !(lambda2 >= 0.0 && lambda2 <= 1.0)) {
    throw std::domain_error("HiddenVariables: components must lie in [0, 1]");
  }
}

DataColumns::DataColumns(std::vector<std::string> names,
                         std::vector<std::vector<SpinOutcome>> columns)
    : names_(std::move(names)), columns_(std::move(columns)) {
  if (columns_.empty()) {
    throw std::invalid_argument("DataColumns: at least one column required");
  }
  if (names_.size() != columns_.size()) {
    throw std::invalid_argument("DataColumns: one name per column required");
  }
  const std::size_t n = columns_.front().size();
  if (n == 0) {
    throw std::invalid_argument("DataColumns: columns must be nonempty");
  }
  for (const auto& column : columns_) {
    if (column.size() != n) {
      throw std::invalid_argument("DataColumns: columns differ in length");
    }
  }
}

std::string_view to_string(CorrelationSource source) {
  switch (source) {
    case CorrelationSource::empirical:
      return "empirical";
    case CorrelationSource::analytic_nonstationary:
      return "analytic-nonstationary";
    case CorrelationSource::stationary_assumed:
      return "stationary-assumed";
  }
  throw std::logic_error("CorrelationSource: unknown value");
}

std::string_view to_string(InequalityForm form) {
  switch (form) {
    case InequalityForm::bell3:
      return "bell3";
    case InequalityForm::chsh4:
      return "chsh4";
    case InequalityForm::ch:
      return "ch";
  }
  throw std::logic_error("InequalityForm: unknown value");
}

namespace {
// Admits the one-ulp overshoot analytic cosines can produce; empirical
// values are exact rationals and never need it.
constexpr double kCorrelationRangeSlack = 1e-9;
}  // namespace

void CorrelationSet::set(std::string first, std::string second, double value) {
  if (!(std::fabs(value) <= 1.0 + kCorrelationRangeSlack)) {
    throw std::domain_error("CorrelationSet: correlation outside [-1, 1]");
  }
  for (auto& entry : entries_) {
    if (entry.first == first && entry.second == second) {
      entry.value = value;
      return;
    }
  }
  entries_.push_back({std::move(first), std::move(second), value});
}

double CorrelationSet::at(std::string_view first,
                          std::string_view second) const {
  for (const auto& entry : entries_) {
    if ((entry.first == first && entry.second == second) ||
        (entry.first == second && entry.second == first)) {
      return entry.value;
    }
  }
  throw std::out_of_range("CorrelationSet: no entry for requested pair");
}

InequalityReport make_report(InequalityForm form, double lhs, double bound,
                             double epsilon) {
  const double margin = bound - lhs;
  return {form, lhs, bound, margin, margin >= -epsilon, epsilon};
}

std::int64_t outcome_product_sum(std::span<const SpinOutcome> x,
                                 std::span<const SpinOutcome> y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("outcome_product_sum: length mismatch");
  }
  if (x.empty()) {
    throw std::invalid_argument("outcome_product_sum: empty lists");
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * y[i];
  }
  return sum;
}

double correlation_estimate(std::span<const SpinOutcome> x,
                            std::span<const SpinOutcome> y) {
  return static_cast<double>(outcome_product_sum(x, y)) /
         static_cast<double>(x.size());
}

}  // namespace bellsim
