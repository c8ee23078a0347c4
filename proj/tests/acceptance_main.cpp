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

// Acceptance suite. Runs each release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. argv[1] must point at the bellsim
// CLI binary (the reproducibility criterion drives it as a subprocess).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bellsim/gedanken.hpp"
#include "bellsim/hvsampler.hpp"
#include "bellsim/ineq.hpp"
#include "bellsim/seqspin.hpp"

using namespace bellsim;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void criterion(int number, const std::string& name, bool pass,
               const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) {
    ++failures;
  }
}

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

ProcessResult run_process(const std::string& command) {
  ProcessResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// --- criteria ---------------------------------------------------------------

void check_gedanken_correlations() {
  const GedankenConfig cfg{Angle(0), Angle(2 * kPi / 3), Angle(kPi / 3),
                           1'000'000, 20260811};
  const auto start = std::chrono::steady_clock::now();
  const CorrelationSet emp = run_experiment(cfg, 1);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const double err_ab = std::fabs(emp.at(kLabelA, kLabelB) - 0.5);
  const double err_ab_prime = std::fabs(emp.at(kLabelA, kLabelBPrime) + 0.5);
  const double err_bb_prime = std::fabs(emp.at(kLabelB, kLabelBPrime) - 0.0);
  const bool pass = err_ab <= 0.005 && err_ab_prime <= 0.005 &&
                    err_bb_prime <= 0.005 && seconds < 5.0;

  std::ostringstream detail;
  detail << "N=1e6 at (0, 2pi/3, pi/3): |<AB>-0.5|=" << err_ab
         << ", |<AB'>+0.5|=" << err_ab_prime << ", |<BB'>|=" << err_bb_prime
         << " vs 0.005; runtime " << seconds << "s < 5s";
  criterion(1, "gedanken correlations match the closed forms", pass,
            detail.str());
}

void check_gedanken_saturation() {
  double worst_analytic = 0.0;
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 30; ++j) {
      for (int k = 0; k < 30; ++k) {
        const InequalityReport report =
            bell_lhs_gedanken(Angle(2 * kPi * i / 30.0),
                              Angle(2 * kPi * j / 30.0),
                              Angle(2 * kPi * k / 30.0));
        worst_analytic = std::fmax(worst_analytic, std::fabs(report.lhs - 1.0));
      }
    }
  }

  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  double worst_empirical = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const GedankenConfig cfg{Angle(angle(rng)), Angle(angle(rng)),
                             Angle(angle(rng)), 1'000'000,
                             9000 + static_cast<std::uint64_t>(rep)};
    const CorrelationSet emp = run_experiment(cfg, 1);
    const double lhs = std::fabs(emp.at(kLabelA, kLabelB) -
                                 emp.at(kLabelA, kLabelBPrime)) +
                       emp.at(kLabelB, kLabelBPrime);
    worst_empirical = std::fmax(worst_empirical, std::fabs(lhs - 1.0));
  }

  const bool pass = worst_analytic <= 1e-12 && worst_empirical <= 0.01;
  std::ostringstream detail;
  detail << "30^3 grid worst |lhs-1| = " << worst_analytic
         << " vs 1e-12; 10 random triples at N=1e6 worst empirical |lhs-1| = "
         << worst_empirical << " vs 0.01";
  criterion(2, "the constructed set saturates the three-list bound", pass,
            detail.str());
}

void check_chain_correlations() {
  const ChainConfig cfg{Angle(kPi / 3), Angle(kPi), 1'000'000, 20260812};
  const CorrelationSet emp = run_chain_experiment(cfg, 1);
  const double err_s0s1 = std::fabs(emp.at(kLabelS0, kLabelS1) - 0.5);
  const double err_s1s2 = std::fabs(emp.at(kLabelS1, kLabelS2) + 0.5);
  const double err_s0s2 = std::fabs(emp.at(kLabelS0, kLabelS2) + 0.25);

  double worst_product = 0.0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const CorrelationSet corr = analytic_chain_correlations(
          Angle(2 * kPi * i / 100.0), Angle(2 * kPi * j / 100.0));
      worst_product = std::fmax(
          worst_product, std::fabs(corr.at(kLabelS0, kLabelS2) -
                                   corr.at(kLabelS0, kLabelS1) *
                                       corr.at(kLabelS1, kLabelS2)));
    }
  }

  const bool pass = err_s0s1 <= 0.005 && err_s1s2 <= 0.005 &&
                    err_s0s2 <= 0.005 && worst_product <= 1e-12;
  std::ostringstream detail;
  detail << "N=1e6 at (pi/3, pi): errors " << err_s0s1 << ", " << err_s1s2
         << ", " << err_s0s2 << " vs 0.005; product-rule worst "
         << worst_product << " vs 1e-12 on 100x100 grid";
  criterion(3, "sequential chain correlations match the closed forms", pass,
            detail.str());
}

void check_chain_inequality() {
  double worst_excess = 0.0;
  double worst_margin = 0.0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double t1 = 2 * kPi * i / 100.0;
      const double t2 = 2 * kPi * j / 100.0;
      const InequalityReport report = bell_lhs_chain(Angle(t1), Angle(t2));
      worst_excess = std::fmax(worst_excess, report.lhs - 1.0);
      const double half = std::sin((t2 - t1) / 2.0);
      const double closed_form =
          2.0 * half * half * (1.0 - std::fabs(std::cos(t1)));
      worst_margin =
          std::fmax(worst_margin, std::fabs(report.margin - closed_form));
    }
  }
  const bool pass = worst_excess <= 1e-12 && worst_margin <= 1e-12;
  std::ostringstream detail;
  detail << "100x100 grid: worst lhs-1 = " << worst_excess
         << ", worst |margin - closed form| = " << worst_margin
         << ", both vs 1e-12";
  criterion(4, "chain inequality holds with the closed-form margin", pass,
            detail.str());
}

std::vector<SpinOutcome> random_column(std::mt19937_64& rng,
                                       std::size_t length, double bias) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SpinOutcome> column;
  column.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    column.push_back(unit(rng) < bias ? SpinOutcome::plus()
                                      : SpinOutcome::minus());
  }
  return column;
}

void check_list_identities() {
  std::mt19937_64 rng(5050);
  std::uniform_int_distribution<std::size_t> length(1, 1000);
  std::uniform_real_distribution<double> bias(0.0, 1.0);

  int bell3_failures = 0;
  for (int rep = 0; rep < 10'000; ++rep) {
    const std::size_t n = length(rng);
    const InequalityReport report = bell3_audit(
        DataColumns({"a", "b", "bprime"},
                    {random_column(rng, n, bias(rng)),
                     random_column(rng, n, bias(rng)),
                     random_column(rng, n, bias(rng))}));
    if (!report.satisfied || report.margin < 0.0 || report.epsilon != 0.0) {
      ++bell3_failures;
    }
  }

  int chsh4_failures = 0;
  for (int rep = 0; rep < 10'000; ++rep) {
    const std::size_t n = length(rng);
    const InequalityReport report = chsh4_audit(
        DataColumns({"a", "aprime", "b", "bprime"},
                    {random_column(rng, n, bias(rng)),
                     random_column(rng, n, bias(rng)),
                     random_column(rng, n, bias(rng)),
                     random_column(rng, n, bias(rng))}));
    if (!report.satisfied || report.margin < 0.0 || report.bound != 2.0) {
      ++chsh4_failures;
    }
  }

  const bool pass = bell3_failures == 0 && chsh4_failures == 0;
  std::ostringstream detail;
  detail << "10^4 random 3-column sets: " << bell3_failures
         << " failures; 10^4 random 4-column sets: " << chsh4_failures
         << " failures; exact integer audits, zero tolerance";
  criterion(5, "finite-list identities hold exactly", pass, detail.str());
}

void check_misidentification() {
  const InequalityReport stationary =
      stationary_lhs(Angle(0), Angle(3 * kPi / 4), Angle(kPi / 4),
                     StationaryConvention::all_pairs_negative_cosine);
  const InequalityReport nonstationary =
      bell_lhs_gedanken(Angle(0), Angle(3 * kPi / 4), Angle(kPi / 4));

  const double stationary_error = std::fabs(stationary.lhs - std::sqrt(2.0));
  const double nonstationary_error = std::fabs(nonstationary.lhs - 1.0);
  const bool pass = stationary_error <= 1e-9 && !stationary.satisfied &&
                    nonstationary_error <= 1e-12 && nonstationary.satisfied;
  std::ostringstream detail;
  detail << "at (0, 3pi/4, pi/4): stationary lhs = " << stationary.lhs
         << " (|lhs - sqrt2| = " << stationary_error << " vs 1e-9, "
         << (stationary.satisfied ? "satisfied" : "VIOLATED")
         << "); nonstationary lhs = " << nonstationary.lhs << " ("
         << (nonstationary.satisfied ? "SATISFIED" : "violated") << ")";
  criterion(6, "stationary extrapolation violates, the construction does not",
            pass, detail.str());
}

void check_ch_chsh_equivalence() {
  std::mt19937_64 rng(606060);
  std::uniform_real_distribution<double> corr(-1.0, 1.0);
  int flag_mismatches = 0;
  double worst_affine = 0.0;
  for (int rep = 0; rep < 10'000; ++rep) {
    const double c1 = corr(rng), c2 = corr(rng), c3 = corr(rng),
                 c4 = corr(rng);
    const double chsh = std::fabs(c1 - c2 + c3 + c4);
    const InequalityReport report = ch_audit(c1, c2, c3, c4);
    if (!report.satisfied != (chsh > 2.0)) {
      ++flag_mismatches;
    }
    worst_affine =
        std::fmax(worst_affine, std::fabs(report.lhs - (chsh - 2.0) / 4.0));
  }
  const bool pass = flag_mismatches == 0 && worst_affine <= 1e-12;
  std::ostringstream detail;
  detail << "10^4 random quadruples: " << flag_mismatches
         << " violated-flag mismatches; worst |ch - (chsh-2)/4| = "
         << worst_affine << " vs 1e-12";
  criterion(7, "CH audit is affinely equivalent to the CHSH combination",
            pass, detail.str());
}

void check_probability_laws() {
  double worst_sum = 0.0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const Angle t1(2 * kPi * i / 100.0), t2(2 * kPi * j / 100.0);
      double total = 0.0;
      for (const SpinOutcome s2 :
           {SpinOutcome::plus(), SpinOutcome::minus()}) {
        for (const SpinOutcome s0 :
             {SpinOutcome::plus(), SpinOutcome::minus()}) {
          total += joint_prob_s2_s0(s2, s0, t1, t2);
        }
      }
      worst_sum = std::fmax(worst_sum, std::fabs(total - 1.0));
    }
  }

  std::mt19937_64 rng(717171);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  constexpr std::uint64_t n = 100'000;
  int band_failures = 0;
  for (int setting = 0; setting < 20; ++setting) {
    const Angle delta(angle(rng));
    const double p_flip = cos_squared_half_angle(delta);
    std::uint64_t plus_count = 0, flip_given_plus = 0;
    std::uint64_t minus_count = 0, flip_given_minus = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
      const HiddenVariables hv = draw_hidden_variables(
          {40'000 + static_cast<std::uint64_t>(setting), t});
      const SpinOutcome a = outcome_a(hv.lambda1());
      const SpinOutcome b = outcome_b_given_a(a, hv.lambda2(), delta);
      if (a == SpinOutcome::plus()) {
        ++plus_count;
        flip_given_plus += b == SpinOutcome::minus() ? 1 : 0;
      } else {
        ++minus_count;
        flip_given_minus += b == SpinOutcome::plus() ? 1 : 0;
      }
    }
    const double freq_plus =
        static_cast<double>(flip_given_plus) / static_cast<double>(plus_count);
    const double freq_minus = static_cast<double>(flip_given_minus) /
                              static_cast<double>(minus_count);
    const double band_plus =
        4.0 * std::sqrt(p_flip * (1.0 - p_flip) /
                        static_cast<double>(plus_count));
    const double band_minus =
        4.0 * std::sqrt(p_flip * (1.0 - p_flip) /
                        static_cast<double>(minus_count));
    if (std::fabs(freq_plus - p_flip) > band_plus ||
        std::fabs(freq_minus - p_flip) > band_minus) {
      ++band_failures;
    }
  }

  const bool pass = worst_sum <= 1e-12 && band_failures == 0;
  std::ostringstream detail;
  detail << "joint normalization worst |sum - 1| = " << worst_sum
         << " vs 1e-12 on 100x100 grid; conditional frequencies at N=1e5: "
         << band_failures << " of 20 settings outside 4 sigma";
  criterion(8, "probability normalization and conditional laws hold", pass,
            detail.str());
}

void check_reproducibility(const std::string& cli_path) {
  if (cli_path.empty()) {
    criterion(9, "same seed and flags give byte-identical output", false,
              "no CLI binary path supplied in argv[1]");
    return;
  }
  const std::string quoted = "'" + cli_path + "'";

  const std::string gedanken_cmd =
      quoted +
      " gedanken --theta-a 0 --theta-b 2.0943951023931953 --theta-b-prime "
      "1.0471975511965976 --trials 100000 --seed 12345";
  const ProcessResult g1 = run_process(gedanken_cmd);
  const ProcessResult g2 = run_process(gedanken_cmd);

  const std::string sweep_base =
      quoted +
      " sweep --experiment sequential --sweep theta2 --start 0 --stop "
      "6.283185307179586 --steps 21 --theta1 1.0471975511965976 --trials "
      "50000 --seed 99 --threads ";
  const ProcessResult s1 = run_process(sweep_base + "1");
  const ProcessResult s4 = run_process(sweep_base + "4");

  const std::string demo_base =
      quoted + " demo-violation --trials 20000 --seed 5 --threads ";
  const ProcessResult d1 = run_process(demo_base + "1");
  const ProcessResult d3 = run_process(demo_base + "3");

  const bool pass = g1.exit_code == 0 && g1.exit_code == g2.exit_code &&
                    !g1.out.empty() && g1.out == g2.out &&
                    s1.exit_code == 0 && s4.exit_code == 0 &&
                    !s1.out.empty() && s1.out == s4.out &&
                    d1.exit_code == 0 && d3.exit_code == 0 &&
                    !d1.out.empty() && d1.out == d3.out;
  std::ostringstream detail;
  detail << "gedanken rerun identical: " << (g1.out == g2.out ? "yes" : "NO")
         << "; sweep threads 1 vs 4 identical: "
         << (s1.out == s4.out ? "yes" : "NO")
         << "; demo threads 1 vs 3 identical: "
         << (d1.out == d3.out ? "yes" : "NO");
  criterion(9, "same seed and flags give byte-identical output", pass,
            detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";

  check_gedanken_correlations();
  check_gedanken_saturation();
  check_chain_correlations();
  check_chain_inequality();
  check_list_identities();
  check_misidentification();
  check_ch_chsh_equivalence();
  check_probability_laws();
  check_reproducibility(cli_path);

  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
