// Copyright 2026 The achull Authors.
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

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "achull/directions.hpp"
#include "achull/errors.hpp"
#include "achull/types.hpp"

namespace achull {

/// Malformed CSV input. line() is 1-based.
class CsvError : public ValidationError {
 public:
  CsvError(const std::string& what, std::size_t line)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Grammar: one row per line, comma-separated decimal floats; lines starting
// with '#' are comments (header); blank lines are skipped; LF or CRLF.
// Values are written with 17 significant digits so reading them back is exact.

/// Rows of a numeric CSV; all rows must have the same number of fields.
std::vector<std::vector<double>> read_csv_rows(std::istream& in);

PointCloud read_points(std::istream& in);
PointCloud read_points(const std::filesystem::path& path);

void write_points(std::ostream& out, const PointCloud& cloud);
void write_points(const std::filesystem::path& path, const PointCloud& cloud);

/// n normal columns followed by the offset.
void write_halfspaces(std::ostream& out, const OuterHull& hull);
void write_halfspaces(const std::filesystem::path& path, const OuterHull& hull);
OuterHull read_halfspaces(const std::filesystem::path& path);

void write_directions(const std::filesystem::path& path, const DirectionSet& dirs);
DirectionSet read_directions(const std::filesystem::path& path);

/// 17 significant digits; reads back to exactly v.
std::string format_double(double v);

}  // namespace achull
