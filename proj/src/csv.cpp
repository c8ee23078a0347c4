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

#include "bellsim/csv.hpp"

#include <cstdio>
#include <istream>
#include <vector>

namespace bellsim {

namespace {

std::string trimmed(const std::string& field) {
  const auto begin = field.find_first_not_of(" \t");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = field.find_last_not_of(" \t");
  return field.substr(begin, end - begin + 1);
}

std::vector<std::string> split_line(std::string line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trimmed(line.substr(start)));
      break;
    }
    fields.push_back(trimmed(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

SpinOutcome parse_outcome(const std::string& field, std::size_t line_number) {
  if (field == "+1" || field == "1") {
    return SpinOutcome::plus();
  }
  if (field == "-1") {
    return SpinOutcome::minus();
  }
  throw CsvError("line " + std::to_string(line_number) + ": entry '" + field +
                 "' is not +1 or -1");
}

}  // namespace

DataColumns read_outcome_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw CsvError("line 1: missing header row");
  }
  const std::vector<std::string> names = split_line(line);
  for (const auto& name : names) {
    if (name.empty()) {
      throw CsvError("line 1: empty column name in header");
    }
  }

  std::vector<std::vector<SpinOutcome>> columns(names.size());
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") {
      continue;  // tolerate a trailing blank line
    }
    const std::vector<std::string> fields = split_line(line);
    if (fields.size() != names.size()) {
      throw CsvError("line " + std::to_string(line_number) + ": expected " +
                     std::to_string(names.size()) + " fields, found " +
                     std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      columns[i].push_back(parse_outcome(fields[i], line_number));
    }
  }
  if (columns.front().empty()) {
    throw CsvError("no data rows after the header");
  }
  return DataColumns(names, std::move(columns));
}

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace bellsim
