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

#ifndef BELLSIM_CSV_HPP
#define BELLSIM_CSV_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bellsim/core.hpp"

namespace bellsim {

/// Malformed CSV input; the message carries the offending line number.
class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads outcome columns from CSV: a header row naming the columns, then
/// one row of +1/-1 entries per trial (plain 1 is accepted for +1).
/// Anything else — ragged rows, values outside {+1, -1}, an empty body —
/// raises CsvError.
DataColumns read_outcome_csv(std::istream& in);

/// Renders a real with 17 significant digits, enough for doubles to
/// round-trip through text exactly.
std::string format_real(double value);

}  // namespace bellsim

#endif  // BELLSIM_CSV_HPP
