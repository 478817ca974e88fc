// Copyright 2026 The rbwalk Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbwalk {

/// Shortest round-trip decimal form with at most 17 significant digits.
std::string format_double(double x);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
void write_csv_row(std::ostream& out, const std::vector<double>& values);

/// Numeric CSV with a mandatory header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column index by header name; throws InvalidArgument if absent.
  std::size_t column(const std::string& name) const;
};

/// Parses a header row followed by rows of doubles. Every row must have as
/// many fields as the header. Throws InvalidArgument on malformed input.
CsvTable read_csv(std::istream& in);

CsvTable read_csv_file(const std::string& path);

}  // namespace rbwalk
