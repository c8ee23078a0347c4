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

#ifndef BELLSIM_CLI_HPP
#define BELLSIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bellsim::cli {

/// Exit-code contract, stable for scripting:
///   0 — success; for audits, the inequality is satisfied
///   1 — an audited inequality was violated
///   2 — usage error (bad flags, malformed input data)
///   3 — I/O failure (unreadable input, unwritable output)
inline constexpr int kExitSatisfied = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Entry point used by main().
int run(int argc, const char* const* argv);

/// Same, but with explicit argument list (no program name) and streams;
/// lets tests drive the tool in-process.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bellsim::cli

#endif  // BELLSIM_CLI_HPP
