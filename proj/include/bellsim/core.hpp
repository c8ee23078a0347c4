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

#ifndef BELLSIM_CORE_HPP
#define BELLSIM_CORE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bellsim {

/// Detector orientation in radians. Values are kept exactly as given;
/// normalized() maps into [0, 2pi) on request but is never applied
/// implicitly, so trigonometric periodicity is the only wrap-around rule.
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians);
  static Angle from_degrees(double degrees);

  constexpr double radians() const { return radians_; }
  Angle normalized() const;

  friend Angle operator-(Angle lhs, Angle rhs) {
    return Angle(lhs.radians_ - rhs.radians_);
  }
  friend constexpr bool operator==(Angle, Angle) = default;

 private:
  double radians_ = 0.0;
};

/// cos^2(delta/2), the quantum conditional-probability weight attached to a
/// detector separation delta. Computed through the half-angle identity
/// (1 + cos delta)/2 so that delta = 0 and delta = pi land exactly on 1 and 0.
double cos_squared_half_angle(Angle delta);

/// A single spin readout, restricted to +1 or -1 (never 0).
class SpinOutcome {
 public:
  constexpr SpinOutcome() = default;

  /// Validating constructor for external data; throws std::domain_error
  /// unless value is +1 or -1.
  explicit constexpr SpinOutcome(int value)
      : value_(static_cast<std::int8_t>(
            (value == 1 || value == -1)
                ? value
                : throw std::domain_error(
                      "SpinOutcome: value must be +1 or -1"))) {}

  static constexpr SpinOutcome plus() { return SpinOutcome(1); }
  static constexpr SpinOutcome minus() { return SpinOutcome(-1); }

  constexpr int value() const { return value_; }

  friend constexpr SpinOutcome operator-(SpinOutcome s) {
    return SpinOutcome(-s.value_);
  }
  friend constexpr int operator*(SpinOutcome a, SpinOutcome b) {
    return a.value_ * b.value_;
  }
  friend constexpr bool operator==(SpinOutcome, SpinOutcome) = default;

 private:
  std::int8_t value_ = 1;
};

/// The pair (lambda1, lambda2), each confined to the closed unit interval.
class HiddenVariables {
 public:
  HiddenVariables(double lambda1, double lambda2);

  double lambda1() const { return lambda1_; }
  double lambda2() const { return lambda2_; }

 private:
  double lambda1_;
  double lambda2_;
};

/// One two-detector trial: the hidden variables drawn for it and the three
/// outcomes they determine. Re-deriving (a, b, b_prime) from hv with the
/// trial's angles must reproduce the stored values.
struct TrialRecord {
  HiddenVariables hv;
  SpinOutcome a;
  SpinOutcome b;
  SpinOutcome b_prime;
};

/// One sequential-measurement trial: outcomes at angles (0, theta1, theta2).
struct ChainRecord {
  SpinOutcome s0;
  SpinOutcome s1;
  SpinOutcome s2;
};

/// Named, equal-length lists of +/-1 outcomes. Three columns feed the
/// three-list audit, four columns the CHSH audit; every column must hold at
/// least one entry.
class DataColumns {
 public:
  DataColumns(std::vector<std::string> names,
              std::vector<std::vector<SpinOutcome>> columns);

  std::size_t column_count() const { return columns_.size(); }
  std::size_t length() const { return columns_.front().size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<SpinOutcome>& column(std::size_t i) const {
    return columns_.at(i);
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<SpinOutcome>> columns_;
};

/// Provenance of a correlation set.
enum class CorrelationSource {
  empirical,
  analytic_nonstationary,
  stationary_assumed,
};

std::string_view to_string(CorrelationSource source);

/// A small map from ordered variable-label pairs to correlation values in
/// [-1, 1], tagged with where the numbers came from. Lookup accepts either
/// order of a pair since correlations are symmetric.
class CorrelationSet {
 public:
  struct Entry {
    std::string first;
    std::string second;
    double value;
  };

  explicit CorrelationSet(CorrelationSource source) : source_(source) {}

  void set(std::string first, std::string second, double value);
  double at(std::string_view first, std::string_view second) const;

  CorrelationSource source() const { return source_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  CorrelationSource source_;
  std::vector<Entry> entries_;
};

enum class InequalityForm { bell3, chsh4, ch };

std::string_view to_string(InequalityForm form);

/// Outcome of evaluating one inequality: the left-hand side, its upper
/// bound, the margin bound - lhs, and the satisfied flag computed as
/// margin >= -epsilon for the tolerance the audit declared.
struct InequalityReport {
  InequalityForm form;
  double lhs;
  double bound;
  double margin;
  bool satisfied;
  double epsilon;
};

/// Builds a report for an upper-bound inequality, deriving margin and the
/// satisfied flag from lhs, bound, and epsilon.
InequalityReport make_report(InequalityForm form, double lhs, double bound,
                             double epsilon);

/// Exact sum of elementwise outcome products. The building block every
/// audit shares: products of +/-1 entries are accumulated as integers, so
/// the result is exact for any list length. Throws std::invalid_argument
/// on empty or unequal-length input.
std::int64_t outcome_product_sum(std::span<const SpinOutcome> x,
                                 std::span<const SpinOutcome> y);

/// (1/N) sum_i x_i y_i, accumulated over integers and divided once.
double correlation_estimate(std::span<const SpinOutcome> x,
                            std::span<const SpinOutcome> y);

}  // namespace bellsim

#endif  // BELLSIM_CORE_HPP
