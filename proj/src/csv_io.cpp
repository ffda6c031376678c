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

#include "achull/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace achull {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_field(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw CsvError("non-numeric field '" + std::string(field) + "'", line);
  }
  if (!std::isfinite(v)) throw CsvError("non-finite value", line);
  return v;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
  return out;
}

void write_row(std::ostream& out, std::span<const double> row) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) out << ',';
    out << format_double(row[k]);
  }
  out << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::vector<std::vector<double>> read_csv_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string raw;
  std::size_t line = 0;
  std::size_t width = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      row.push_back(parse_field(text.substr(start, comma - start), line));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows.empty()) {
      width = row.size();
    } else if (row.size() != width) {
      throw CsvError("expected " + std::to_string(width) + " fields, found " +
                         std::to_string(row.size()),
                     line);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PointCloud read_points(std::istream& in) {
  auto rows = read_csv_rows(in);
  if (rows.empty()) throw ValidationError("point file contains no rows");
  return PointCloud::from_rows(rows);
}

PointCloud read_points(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointCloud& cloud) {
  for (std::size_t i = 0; i < cloud.size(); ++i) write_row(out, cloud[i]);
}

void write_points(const std::filesystem::path& path, const PointCloud& cloud) {
  auto out = open_out(path);
  write_points(out, cloud);
}

void write_halfspaces(std::ostream& out, const OuterHull& hull) {
  std::vector<double> row(hull.dim + 1);
  for (const auto& h : hull.halfspaces) {
    std::copy(h.normal.begin(), h.normal.end(), row.begin());
    row[hull.dim] = h.offset;
    write_row(out, row);
  }
}

void write_halfspaces(const std::filesystem::path& path, const OuterHull& hull) {
  auto out = open_out(path);
  out << "# normal[0.." << hull.dim << "),offset\n";
  write_halfspaces(out, hull);
}

OuterHull read_halfspaces(const std::filesystem::path& path) {
  auto in = open_in(path);
  const auto rows = read_csv_rows(in);
  if (rows.empty()) throw ValidationError("halfspace file contains no rows");
  if (rows.front().size() < 3) throw ValidationError("halfspace rows need n >= 2 normal columns");
  OuterHull hull;
  hull.dim = rows.front().size() - 1;
  for (const auto& r : rows) {
    Halfspace h;
    h.normal.assign(r.begin(), r.end() - 1);
    h.offset = r.back();
    if (std::abs(norm(h.normal) - 1.0) > 1e-9) {
      throw ValidationError("halfspace normal is not a unit vector");
    }
    hull.halfspaces.push_back(std::move(h));
  }
  return hull;
}

void write_directions(const std::filesystem::path& path, const DirectionSet& dirs) {
  auto out = open_out(path);
  for (std::size_t j = 0; j < dirs.size(); ++j) write_row(out, dirs[j]);
}

DirectionSet read_directions(const std::filesystem::path& path) {
  auto in = open_in(path);
  const auto rows = read_csv_rows(in);
  if (rows.empty()) throw ValidationError("direction file contains no rows");
  std::vector<double> coords;
  for (const auto& r : rows) coords.insert(coords.end(), r.begin(), r.end());
  return DirectionSet(rows.front().size(), std::move(coords), 0, DirectionMethod::Explicit);
}

}  // namespace achull
