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

#include "bellsim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellsim/csv.hpp"
#include "bellsim/gedanken.hpp"
#include "bellsim/ineq.hpp"
#include "bellsim/seqspin.hpp"

namespace bellsim::cli {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("BELLSIM_SEED");
  if (raw == nullptr) {
    return 0;
  }
  std::uint64_t value = 0;
  const char* end = raw + std::string_view(raw).size();
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string("BELLSIM_SEED is not a 64-bit unsigned "
                                 "integer: '") +
                     raw + "'");
  }
  return value;
}

Angle to_angle(double value, bool degrees) {
  return degrees ? Angle::from_degrees(value) : Angle(value);
}

// Routes a command's report either to the session stream or to --output.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback)
      : fallback_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw IoError("cannot open output file: " + path);
      }
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : *fallback_; }

  void finish() {
    stream().flush();
    if (!stream()) {
      throw IoError("failed writing output");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* fallback_;
};

template <typename WriteFn>
void dump_to_file(const std::string& path, WriteFn write_fn) {
  std::ofstream file(path);
  if (!file) {
    throw IoError("cannot open trial dump file: " + path);
  }
  write_fn(file);
  file.flush();
  if (!file) {
    throw IoError("failed writing trial dump: " + path);
  }
}

std::string csv_bool(bool value) { return value ? "true" : "false"; }

ordered_json report_json(const InequalityReport& report) {
  return ordered_json{{"form", std::string(to_string(report.form))},
                      {"lhs", report.lhs},
                      {"bound", report.bound},
                      {"margin", report.margin},
                      {"satisfied", report.satisfied}};
}

void write_report_csv(std::ostream& out, const InequalityReport& report) {
  out << "form,lhs,bound,margin,satisfied\n"
      << to_string(report.form) << ',' << format_real(report.lhs) << ','
      << format_real(report.bound) << ',' << format_real(report.margin) << ','
      << csv_bool(report.satisfied) << '\n';
}

// ---------------------------------------------------------------------------
// gedanken / sequential
// ---------------------------------------------------------------------------

struct ExperimentOptions {
  double angle0 = 0.0;  // theta_a | theta1
  double angle1 = 0.0;  // theta_b | theta2
  double angle2 = 0.0;  // theta_b_prime (gedanken only)
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned threads = 1;
  bool degrees = false;
  std::string dump_trials;
  std::string format = "csv";
  std::string output;
};

void resolve_seed(ExperimentOptions& options) {
  if (!options.seed_given) {
    options.seed = seed_from_env();
  }
}

int run_gedanken(ExperimentOptions options, std::ostream& session_out) {
  resolve_seed(options);
  const Angle theta_a = to_angle(options.angle0, options.degrees);
  const Angle theta_b = to_angle(options.angle1, options.degrees);
  const Angle theta_b_prime = to_angle(options.angle2, options.degrees);
  const GedankenConfig config{theta_a, theta_b, theta_b_prime, options.trials,
                              options.seed};

  const CorrelationSet empirical = run_experiment(config, options.threads);
  const CorrelationSet analytic =
      analytic_gedanken_correlations(theta_a, theta_b, theta_b_prime);
  const InequalityReport report =
      bell_lhs_gedanken(theta_a, theta_b, theta_b_prime);

  if (!options.dump_trials.empty()) {
    dump_to_file(options.dump_trials,
                 [&config](std::ostream& f) { write_trials_csv(f, config); });
  }

  OutputTarget target(options.output, session_out);
  if (options.format == "json") {
    ordered_json j{
        {"command", "gedanken"},
        {"config",
         {{"theta_a", theta_a.radians()},
          {"theta_b", theta_b.radians()},
          {"theta_b_prime", theta_b_prime.radians()},
          {"trials", options.trials},
          {"seed", options.seed}}},
        {"empirical",
         {{"source", std::string(to_string(empirical.source()))},
          {"ab", empirical.at(kLabelA, kLabelB)},
          {"abprime", empirical.at(kLabelA, kLabelBPrime)},
          {"bbprime", empirical.at(kLabelB, kLabelBPrime)}}},
        {"analytic",
         {{"source", std::string(to_string(analytic.source()))},
          {"ab", analytic.at(kLabelA, kLabelB)},
          {"abprime", analytic.at(kLabelA, kLabelBPrime)},
          {"bbprime", analytic.at(kLabelB, kLabelBPrime)}}},
        {"report", report_json(report)}};
    target.stream() << j.dump(2) << '\n';
  } else {
    target.stream()
        << "theta_a,theta_b,theta_b_prime,trials,seed,emp_ab,emp_abprime,"
           "emp_bbprime,ana_ab,ana_abprime,ana_bbprime,lhs,bound,margin,"
           "satisfied\n"
        << format_real(theta_a.radians()) << ','
        << format_real(theta_b.radians()) << ','
        << format_real(theta_b_prime.radians()) << ',' << options.trials << ','
        << options.seed << ',' << format_real(empirical.at(kLabelA, kLabelB))
        << ',' << format_real(empirical.at(kLabelA, kLabelBPrime)) << ','
        << format_real(empirical.at(kLabelB, kLabelBPrime)) << ','
        << format_real(analytic.at(kLabelA, kLabelB)) << ','
        << format_real(analytic.at(kLabelA, kLabelBPrime)) << ','
        << format_real(analytic.at(kLabelB, kLabelBPrime)) << ','
        << format_real(report.lhs) << ',' << format_real(report.bound) << ','
        << format_real(report.margin) << ',' << csv_bool(report.satisfied)
        << '\n';
  }
  target.finish();
  return report.satisfied ? kExitSatisfied : kExitViolated;
}

int run_sequential(ExperimentOptions options, std::ostream& session_out) {
  resolve_seed(options);
  const Angle theta1 = to_angle(options.angle0, options.degrees);
  const Angle theta2 = to_angle(options.angle1, options.degrees);
  const ChainConfig config{theta1, theta2, options.trials, options.seed};

  const CorrelationSet empirical =
      run_chain_experiment(config, options.threads);
  const CorrelationSet analytic = analytic_chain_correlations(theta1, theta2);
  const InequalityReport report = bell_lhs_chain(theta1, theta2);

  if (!options.dump_trials.empty()) {
    dump_to_file(options.dump_trials, [&config](std::ostream& f) {
      write_chain_trials_csv(f, config);
    });
  }

  OutputTarget target(options.output, session_out);
  if (options.format == "json") {
    ordered_json j{
        {"command", "sequential"},
        {"config",
         {{"theta1", theta1.radians()},
          {"theta2", theta2.radians()},
          {"trials", options.trials},
          {"seed", options.seed}}},
        {"empirical",
         {{"source", std::string(to_string(empirical.source()))},
          {"s0s1", empirical.at(kLabelS0, kLabelS1)},
          {"s1s2", empirical.at(kLabelS1, kLabelS2)},
          {"s0s2", empirical.at(kLabelS0, kLabelS2)}}},
        {"analytic",
         {{"source", std::string(to_string(analytic.source()))},
          {"s0s1", analytic.at(kLabelS0, kLabelS1)},
          {"s1s2", analytic.at(kLabelS1, kLabelS2)},
          {"s0s2", analytic.at(kLabelS0, kLabelS2)}}},
        {"report", report_json(report)}};
    target.stream() << j.dump(2) << '\n';
  } else {
    target.stream()
        << "theta1,theta2,trials,seed,emp_s0s1,emp_s1s2,emp_s0s2,ana_s0s1,"
           "ana_s1s2,ana_s0s2,lhs,bound,margin,satisfied\n"
        << format_real(theta1.radians()) << ',' << format_real(theta2.radians())
        << ',' << options.trials << ',' << options.seed << ','
        << format_real(empirical.at(kLabelS0, kLabelS1)) << ','
        << format_real(empirical.at(kLabelS1, kLabelS2)) << ','
        << format_real(empirical.at(kLabelS0, kLabelS2)) << ','
        << format_real(analytic.at(kLabelS0, kLabelS1)) << ','
        << format_real(analytic.at(kLabelS1, kLabelS2)) << ','
        << format_real(analytic.at(kLabelS0, kLabelS2)) << ','
        << format_real(report.lhs) << ',' << format_real(report.bound) << ','
        << format_real(report.margin) << ',' << csv_bool(report.satisfied)
        << '\n';
  }
  target.finish();
  return report.satisfied ? kExitSatisfied : kExitViolated;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

struct AuditOptions {
  std::string input;
  std::string form;
  std::string format = "csv";
  std::string output;
};

int run_audit(const AuditOptions& options, std::ostream& session_out) {
  std::ifstream in(options.input);
  if (!in) {
    throw IoError("cannot open input file: " + options.input);
  }
  const DataColumns data = read_outcome_csv(in);
  const InequalityReport report =
      options.form == "bell3" ? bell3_audit(data) : chsh4_audit(data);

  OutputTarget target(options.output, session_out);
  if (options.format == "json") {
    target.stream() << report_json(report).dump(2) << '\n';
  } else {
    write_report_csv(target.stream(), report);
  }
  target.finish();
  return report.satisfied ? kExitSatisfied : kExitViolated;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepOptions {
  std::string experiment;
  std::string swept;
  double start = 0.0;
  double stop = 0.0;
  std::uint64_t steps = 0;
  double theta_a = 0.0;
  double theta_b = 0.0;
  double theta_b_prime = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::string convention = "all-pairs-negative-cosine";
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned threads = 1;
  bool degrees = false;
  std::string output;
};

StationaryConvention parse_convention(const std::string& name) {
  return name == "same-side-positive-cosine"
             ? StationaryConvention::same_side_positive_cosine
             : StationaryConvention::all_pairs_negative_cosine;
}

std::string sweep_row_gedanken_like(const SweepOptions& options,
                                    double theta_radians) {
  const bool stationary = options.experiment == "stationary";
  const Angle theta_a = to_angle(options.theta_a, options.degrees);
  Angle theta_b = to_angle(options.theta_b, options.degrees);
  Angle theta_b_prime = to_angle(options.theta_b_prime, options.degrees);
  if (options.swept == "theta_b") {
    theta_b = Angle(theta_radians);
  } else {
    theta_b_prime = Angle(theta_radians);
  }

  CorrelationSet corr =
      stationary ? stationary_correlations(theta_a, theta_b, theta_b_prime,
                                           parse_convention(options.convention))
                 : analytic_gedanken_correlations(theta_a, theta_b,
                                                  theta_b_prime);
  const InequalityReport report =
      stationary ? stationary_lhs(theta_a, theta_b, theta_b_prime,
                                  parse_convention(options.convention))
                 : bell_lhs_gedanken(theta_a, theta_b, theta_b_prime);

  std::string emp_ab, emp_ab_prime, emp_bb_prime;
  if (!stationary && options.trials > 0) {
    const CorrelationSet empirical = run_experiment(
        {theta_a, theta_b, theta_b_prime, options.trials, options.seed}, 1);
    emp_ab = format_real(empirical.at(kLabelA, kLabelB));
    emp_ab_prime = format_real(empirical.at(kLabelA, kLabelBPrime));
    emp_bb_prime = format_real(empirical.at(kLabelB, kLabelBPrime));
  }

  std::ostringstream row;
  row << format_real(theta_radians) << ','
      << format_real(corr.at(kLabelA, kLabelB)) << ','
      << format_real(corr.at(kLabelA, kLabelBPrime)) << ','
      << format_real(corr.at(kLabelB, kLabelBPrime)) << ',' << emp_ab << ','
      << emp_ab_prime << ',' << emp_bb_prime << ',' << format_real(report.lhs)
      << ',' << format_real(report.margin) << ','
      << csv_bool(!report.satisfied);
  return row.str();
}

std::string sweep_row_sequential(const SweepOptions& options,
                                 double theta_radians) {
  Angle theta1 = to_angle(options.theta1, options.degrees);
  Angle theta2 = to_angle(options.theta2, options.degrees);
  if (options.swept == "theta1") {
    theta1 = Angle(theta_radians);
  } else {
    theta2 = Angle(theta_radians);
  }

  const CorrelationSet corr = analytic_chain_correlations(theta1, theta2);
  const InequalityReport report = bell_lhs_chain(theta1, theta2);

  std::string emp_s0s1, emp_s1s2, emp_s0s2;
  if (options.trials > 0) {
    const CorrelationSet empirical = run_chain_experiment(
        {theta1, theta2, options.trials, options.seed}, 1);
    emp_s0s1 = format_real(empirical.at(kLabelS0, kLabelS1));
    emp_s1s2 = format_real(empirical.at(kLabelS1, kLabelS2));
    emp_s0s2 = format_real(empirical.at(kLabelS0, kLabelS2));
  }

  std::ostringstream row;
  row << format_real(theta_radians) << ','
      << format_real(corr.at(kLabelS0, kLabelS1)) << ','
      << format_real(corr.at(kLabelS1, kLabelS2)) << ','
      << format_real(corr.at(kLabelS0, kLabelS2)) << ',' << emp_s0s1 << ','
      << emp_s1s2 << ',' << emp_s0s2 << ',' << format_real(report.lhs) << ','
      << format_real(report.margin) << ',' << csv_bool(!report.satisfied);
  return row.str();
}

int run_sweep(SweepOptions options, std::ostream& session_out) {
  if (!options.seed_given) {
    options.seed = seed_from_env();
  }
  if (options.steps < 2) {
    throw UsageError("--steps must be at least 2");
  }
  if (options.start == options.stop) {
    throw UsageError("--start and --stop must differ");
  }
  const bool sequential = options.experiment == "sequential";
  const bool swept_is_chain_angle =
      options.swept == "theta1" || options.swept == "theta2";
  if (sequential != swept_is_chain_angle) {
    throw UsageError("--sweep " + options.swept +
                     " does not belong to experiment " + options.experiment);
  }

  const double start =
      to_angle(options.start, options.degrees).radians();
  const double stop = to_angle(options.stop, options.degrees).radians();
  const auto steps = options.steps;
  std::vector<std::string> rows(steps);
  const auto make_row = [&](std::uint64_t i) {
    const double theta =
        start + static_cast<double>(i) * (stop - start) /
                    static_cast<double>(steps - 1);
    rows[i] = sequential ? sweep_row_sequential(options, theta)
                         : sweep_row_gedanken_like(options, theta);
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < steps; ++i) {
      make_row(i);
    }
  } else {
    // Grid points are independent; rows land in preassigned slots, so the
    // emitted order never depends on scheduling.
    std::vector<std::future<void>> tasks;
    const std::uint64_t chunk = (steps + threads - 1) / threads;
    for (std::uint64_t begin = 0; begin < steps; begin += chunk) {
      const std::uint64_t end = std::min(steps, begin + chunk);
      tasks.push_back(std::async(std::launch::async, [&make_row, begin, end] {
        for (std::uint64_t i = begin; i < end; ++i) {
          make_row(i);
        }
      }));
    }
    for (auto& task : tasks) {
      task.get();
    }
  }

  OutputTarget target(options.output, session_out);
  target.stream() << (sequential
                          ? "theta,corr_s0s1,corr_s1s2,corr_s0s2,emp_s0s1,"
                            "emp_s1s2,emp_s0s2,lhs,margin,violated\n"
                          : "theta,corr_ab,corr_abprime,corr_bbprime,emp_ab,"
                            "emp_abprime,emp_bbprime,lhs,margin,violated\n");
  for (const auto& row : rows) {
    target.stream() << row << '\n';
  }
  target.finish();
  return kExitSatisfied;
}

// ---------------------------------------------------------------------------
// demo-violation
// ---------------------------------------------------------------------------

struct DemoOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned threads = 1;
  std::string format = "text";
  std::string output;
};

void write_correlations_line(std::ostream& out, const CorrelationSet& corr) {
  out << "<AB> = " << format_real(corr.at(kLabelA, kLabelB))
      << "  <AB'> = " << format_real(corr.at(kLabelA, kLabelBPrime))
      << "  <BB'> = " << format_real(corr.at(kLabelB, kLabelBPrime));
}

int run_demo(DemoOptions options, std::ostream& session_out) {
  if (!options.seed_given) {
    options.seed = seed_from_env();
  }
  const Angle theta_a(0.0);
  const Angle theta_b(3.0 * std::numbers::pi / 4.0);
  const Angle theta_b_prime(std::numbers::pi / 4.0);
  const auto convention = StationaryConvention::all_pairs_negative_cosine;

  const CorrelationSet analytic =
      analytic_gedanken_correlations(theta_a, theta_b, theta_b_prime);
  const InequalityReport nonstationary_report =
      bell_lhs_gedanken(theta_a, theta_b, theta_b_prime);
  const CorrelationSet stationary =
      stationary_correlations(theta_a, theta_b, theta_b_prime, convention);
  const InequalityReport stationary_report =
      stationary_lhs(theta_a, theta_b, theta_b_prime, convention);

  const bool with_empirical = options.trials > 0;
  CorrelationSet empirical(CorrelationSource::empirical);
  double empirical_lhs = 0.0;
  if (with_empirical) {
    empirical = run_experiment(
        {theta_a, theta_b, theta_b_prime, options.trials, options.seed},
        options.threads);
    empirical_lhs = std::fabs(empirical.at(kLabelA, kLabelB) -
                              empirical.at(kLabelA, kLabelBPrime)) +
                    empirical.at(kLabelB, kLabelBPrime);
  }

  OutputTarget target(options.output, session_out);
  std::ostream& out = target.stream();
  if (options.format == "json") {
    ordered_json nonstationary{
        {"analytic",
         {{"ab", analytic.at(kLabelA, kLabelB)},
          {"abprime", analytic.at(kLabelA, kLabelBPrime)},
          {"bbprime", analytic.at(kLabelB, kLabelBPrime)}}},
        {"report", report_json(nonstationary_report)}};
    if (with_empirical) {
      nonstationary["empirical"] = {
          {"ab", empirical.at(kLabelA, kLabelB)},
          {"abprime", empirical.at(kLabelA, kLabelBPrime)},
          {"bbprime", empirical.at(kLabelB, kLabelBPrime)},
          {"lhs", empirical_lhs}};
    }
    ordered_json j{
        {"command", "demo-violation"},
        {"config",
         {{"theta_a", theta_a.radians()},
          {"theta_b", theta_b.radians()},
          {"theta_b_prime", theta_b_prime.radians()},
          {"trials", options.trials},
          {"seed", options.seed}}},
        {"nonstationary", nonstationary},
        {"stationary",
         {{"convention", std::string(to_string(convention))},
          {"correlations",
           {{"ab", stationary.at(kLabelA, kLabelB)},
            {"abprime", stationary.at(kLabelA, kLabelBPrime)},
            {"bbprime", stationary.at(kLabelB, kLabelBPrime)}}},
          {"report", report_json(stationary_report)}}}};
    out << j.dump(2) << '\n';
  } else if (options.format == "csv") {
    out << "case,ab,abprime,bbprime,lhs,bound,margin,satisfied\n";
    out << "nonstationary-analytic,"
        << format_real(analytic.at(kLabelA, kLabelB)) << ','
        << format_real(analytic.at(kLabelA, kLabelBPrime)) << ','
        << format_real(analytic.at(kLabelB, kLabelBPrime)) << ','
        << format_real(nonstationary_report.lhs) << ','
        << format_real(nonstationary_report.bound) << ','
        << format_real(nonstationary_report.margin) << ','
        << csv_bool(nonstationary_report.satisfied) << '\n';
    if (with_empirical) {
      out << "nonstationary-empirical,"
          << format_real(empirical.at(kLabelA, kLabelB)) << ','
          << format_real(empirical.at(kLabelA, kLabelBPrime)) << ','
          << format_real(empirical.at(kLabelB, kLabelBPrime)) << ','
          << format_real(empirical_lhs) << ",1,"
          << format_real(1.0 - empirical_lhs) << ','
          << csv_bool(empirical_lhs <= 1.0 + kRealAuditEpsilon) << '\n';
    }
    out << "stationary," << format_real(stationary.at(kLabelA, kLabelB)) << ','
        << format_real(stationary.at(kLabelA, kLabelBPrime)) << ','
        << format_real(stationary.at(kLabelB, kLabelBPrime)) << ','
        << format_real(stationary_report.lhs) << ','
        << format_real(stationary_report.bound) << ','
        << format_real(stationary_report.margin) << ','
        << csv_bool(stationary_report.satisfied) << '\n';
  } else {
    out << "Bell inequality |<AB> - <AB'>| + <BB'> <= 1 at (theta_a, theta_b, "
           "theta_b_prime) = ("
        << format_real(theta_a.radians()) << ", "
        << format_real(theta_b.radians()) << ", "
        << format_real(theta_b_prime.radians()) << ")\n\n";
    out << "nonstationary construction (B and B' conditioned on A through a "
           "shared hidden variable):\n";
    out << "  analytic:  ";
    write_correlations_line(out, analytic);
    out << '\n';
    if (with_empirical) {
      out << "  empirical: ";
      write_correlations_line(out, empirical);
      out << "  (trials = " << options.trials << ", seed = " << options.seed
          << ")\n";
      out << "  empirical lhs = " << format_real(empirical_lhs) << '\n';
    }
    out << "  lhs = " << format_real(nonstationary_report.lhs)
        << "  bound = " << format_real(nonstationary_report.bound)
        << "  margin = " << format_real(nonstationary_report.margin) << "  -> "
        << (nonstationary_report.satisfied ? "SATISFIED" : "VIOLATED")
        << "\n\n";
    out << "stationary extrapolation (" << to_string(convention)
        << ", a single cosine law for every pair):\n";
    out << "  assumed:   ";
    write_correlations_line(out, stationary);
    out << '\n';
    out << "  lhs = " << format_real(stationary_report.lhs)
        << "  bound = " << format_real(stationary_report.bound)
        << "  margin = " << format_real(stationary_report.margin) << "  -> "
        << (stationary_report.satisfied ? "SATISFIED" : "VIOLATED") << '\n';
  }
  target.finish();
  return kExitSatisfied;
}

// ---------------------------------------------------------------------------
// wiring
// ---------------------------------------------------------------------------

void add_common_flags(CLI::App* sub, ExperimentOptions& options) {
  sub->add_option("--trials", options.trials, "Number of trials")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", options.seed,
                  "Random seed (default: BELLSIM_SEED or 0)");
  sub->add_option("--threads", options.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sub->add_flag("--degrees", options.degrees,
                "Interpret angle flags as degrees");
  sub->add_option("--dump-trials", options.dump_trials,
                  "Write per-trial CSV dump to this path");
  sub->add_option("--format", options.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output", options.output,
                  "Write the report to this path instead of stdout");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "bellsim — nonstationary correlation simulations for two-detector and "
      "sequential spin experiments, with exact Bell/CHSH/CH inequality "
      "audits",
      "bellsim"};
  app.require_subcommand(1);

  ExperimentOptions gedanken_options;
  CLI::App* gedanken_cmd = app.add_subcommand(
      "gedanken",
      "Simulate the two-detector experiment with a counterfactual setting");
  gedanken_cmd
      ->add_option("--theta-a", gedanken_options.angle0,
                   "Fixed detector angle (radians)")
      ->required();
  gedanken_cmd
      ->add_option("--theta-b", gedanken_options.angle1,
                   "Measured detector angle (radians)")
      ->required();
  gedanken_cmd
      ->add_option("--theta-b-prime", gedanken_options.angle2,
                   "Counterfactual detector angle (radians)")
      ->required();
  add_common_flags(gedanken_cmd, gedanken_options);
  CLI::Option* gedanken_seed = gedanken_cmd->get_option("--seed");

  ExperimentOptions sequential_options;
  CLI::App* sequential_cmd = app.add_subcommand(
      "sequential", "Simulate three successive spin measurements");
  sequential_cmd
      ->add_option("--theta1", sequential_options.angle0,
                   "Second measurement angle (radians)")
      ->required();
  sequential_cmd
      ->add_option("--theta2", sequential_options.angle1,
                   "Third measurement angle (radians)")
      ->required();
  add_common_flags(sequential_cmd, sequential_options);
  CLI::Option* sequential_seed = sequential_cmd->get_option("--seed");

  AuditOptions audit_options;
  CLI::App* audit_cmd = app.add_subcommand(
      "audit", "Audit a CSV file of +/-1 columns against an exact inequality");
  audit_cmd->add_option("--input", audit_options.input, "CSV file to audit")
      ->required();
  audit_cmd->add_option("--form", audit_options.form, "Inequality form")
      ->required()
      ->check(CLI::IsMember({"bell3", "chsh4"}));
  audit_cmd->add_option("--format", audit_options.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  audit_cmd->add_option("--output", audit_options.output,
                        "Write the report to this path instead of stdout");

  SweepOptions sweep_options;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Sweep one angle over a grid and emit one CSV row per point");
  sweep_cmd
      ->add_option("--experiment", sweep_options.experiment,
                   "Which correlation set to evaluate")
      ->required()
      ->check(CLI::IsMember({"gedanken", "sequential", "stationary"}));
  sweep_cmd->add_option("--sweep", sweep_options.swept, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"theta_b", "theta_b_prime", "theta1", "theta2"}));
  sweep_cmd->add_option("--start", sweep_options.start, "Grid start (radians)")
      ->required();
  sweep_cmd->add_option("--stop", sweep_options.stop, "Grid stop (radians)")
      ->required();
  sweep_cmd->add_option("--steps", sweep_options.steps, "Grid point count")
      ->required();
  sweep_cmd->add_option("--theta-a", sweep_options.theta_a,
                        "Fixed theta_a (radians)");
  sweep_cmd->add_option("--theta-b", sweep_options.theta_b,
                        "Fixed theta_b (radians)");
  sweep_cmd->add_option("--theta-b-prime", sweep_options.theta_b_prime,
                        "Fixed theta_b_prime (radians)");
  sweep_cmd->add_option("--theta1", sweep_options.theta1,
                        "Fixed theta1 (radians)");
  sweep_cmd->add_option("--theta2", sweep_options.theta2,
                        "Fixed theta2 (radians)");
  sweep_cmd
      ->add_option("--convention", sweep_options.convention,
                   "Stationary same-side sign convention")
      ->check(CLI::IsMember(
          {"all-pairs-negative-cosine", "same-side-positive-cosine"}))
      ->capture_default_str();
  sweep_cmd
      ->add_option("--trials", sweep_options.trials,
                   "Trials per grid point (0 = analytic only)")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_options.seed,
                        "Random seed (default: BELLSIM_SEED or 0)");
  sweep_cmd->add_option("--threads", sweep_options.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--degrees", sweep_options.degrees,
                      "Interpret angle flags as degrees");
  sweep_cmd->add_option("--output", sweep_options.output,
                        "Write rows to this path instead of stdout");
  CLI::Option* sweep_seed = sweep_cmd->get_option("--seed");

  DemoOptions demo_options;
  CLI::App* demo_cmd = app.add_subcommand(
      "demo-violation",
      "Contrast the nonstationary set with the stationary extrapolation at "
      "the settings where the latter is maximally violated");
  demo_cmd
      ->add_option("--trials", demo_options.trials,
                   "Trials for the empirical run (0 = analytic only)")
      ->capture_default_str();
  demo_cmd->add_option("--seed", demo_options.seed,
                       "Random seed (default: BELLSIM_SEED or 0)");
  demo_cmd->add_option("--threads", demo_options.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  demo_cmd->add_option("--format", demo_options.format, "Report format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  demo_cmd->add_option("--output", demo_options.output,
                       "Write the report to this path instead of stdout");
  CLI::Option* demo_seed = demo_cmd->get_option("--seed");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitSatisfied;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitSatisfied;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  gedanken_options.seed_given = gedanken_seed->count() > 0;
  sequential_options.seed_given = sequential_seed->count() > 0;
  sweep_options.seed_given = sweep_seed->count() > 0;
  demo_options.seed_given = demo_seed->count() > 0;

  try {
    if (gedanken_cmd->parsed()) {
      return run_gedanken(gedanken_options, out);
    }
    if (sequential_cmd->parsed()) {
      return run_sequential(sequential_options, out);
    }
    if (audit_cmd->parsed()) {
      return run_audit(audit_options, out);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(sweep_options, out);
    }
    if (demo_cmd->parsed()) {
      return run_demo(demo_options, out);
    }
    err << "error: no command selected\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CsvError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // Internal-consistency failures from the exact audits.
    err << "internal error: " << e.what() << '\n';
    return kExitViolated;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) {
    args.emplace_back(argv[i]);
  }
  return run(std::move(args), std::cout, std::cerr);
}

}  // namespace bellsim::cli
