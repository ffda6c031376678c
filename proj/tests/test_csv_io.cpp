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

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "achull/csv_io.hpp"
#include "achull/sketch.hpp"
#include "oracles.hpp"

namespace achull {
namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  const auto dir = fs::temp_directory_path() /
                   ("achull_csv_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
  fs::create_directories(dir);
  return dir;
}

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_csv_rows(in);
  } catch (const CsvError& e) {
    return e.line();
  }
  return 0;
}

TEST(CsvIo, PointRoundTripIsBitExact) {
  const auto cloud = oracle::random_cloud(5, 100, 3);
  std::stringstream s;
  write_points(s, cloud);
  const auto back = read_points(s);
  ASSERT_EQ(back.dim(), 5u);
  ASSERT_EQ(back.size(), 100u);
  EXPECT_EQ(std::memcmp(back.coords().data(), cloud.coords().data(), cloud.coords().size_bytes()), 0);
}

TEST(CsvIo, FormatDoubleRoundTrips) {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min(),
                   std::numeric_limits<double>::max()}) {
    std::istringstream in(format_double(v));
    EXPECT_EQ(read_csv_rows(in)[0][0], v);
  }
}

TEST(CsvIo, RaggedRowReportsLine) {
  EXPECT_EQ(error_line("1,2,3\n4,5,6\n7,8\n"), 3u);
  EXPECT_EQ(error_line("# header\n1,2\n\n3,4,5\n"), 4u);
}

TEST(CsvIo, NonNumericFieldReportsLine) {
  EXPECT_EQ(error_line("1,2\n3,abc\n"), 2u);
  EXPECT_EQ(error_line("1,2\n3,\n"), 2u);
  EXPECT_EQ(error_line("1,2\n3,4x\n"), 2u);
  EXPECT_EQ(error_line("nan,1\n"), 1u);
  EXPECT_EQ(error_line("inf,1\n"), 1u);
}

TEST(CsvIo, HeaderBlankLinesAndCrlf) {
  std::istringstream in("# x,y\r\n1.5, -2\r\n\r\n +3,4e1 \r\n");
  const auto rows = read_csv_rows(in);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<double>{1.5, -2}));
  EXPECT_EQ(rows[1], (std::vector<double>{3, 40}));
}

TEST(CsvIo, EmptyPointFileRejected) {
  std::istringstream in("# only a header\n");
  EXPECT_THROW(read_points(in), ValidationError);
}

TEST(CsvIo, HalfspaceRoundTrip) {
  const auto cloud = oracle::random_cloud(3, 200, 8);
  const auto dirs = sample_uniform(40, 3, 8);
  const auto hull = outer_hull(build_sketch(cloud, dirs), cloud, dirs);
  const auto path = temp_dir() / "h.csv";
  write_halfspaces(path, hull);
  std::ifstream raw(path);
  const auto rows = read_csv_rows(raw);
  ASSERT_EQ(rows.size(), hull.halfspaces.size());
  EXPECT_EQ(rows[0].size(), 4u);
  const auto back = read_halfspaces(path);
  EXPECT_EQ(back.dim, 3u);
  for (std::size_t i = 0; i < hull.halfspaces.size(); ++i) {
    EXPECT_EQ(back.halfspaces[i].normal, hull.halfspaces[i].normal);
    EXPECT_EQ(back.halfspaces[i].offset, hull.halfspaces[i].offset);
  }
}

TEST(CsvIo, HalfspaceNormalsMustBeUnit) {
  const auto path = temp_dir() / "bad.csv";
  std::ofstream(path) << "2,0,1\n";
  EXPECT_THROW(read_halfspaces(path), ValidationError);
}

TEST(CsvIo, DirectionRoundTrip) {
  const auto dirs = sample_uniform(64, 4, 5);
  const auto path = temp_dir() / "d.csv";
  write_directions(path, dirs);
  const auto back = read_directions(path);
  ASSERT_EQ(back.size(), 64u);
  EXPECT_EQ(std::memcmp(back.coords().data(), dirs.coords().data(), dirs.coords().size_bytes()), 0);
}

TEST(CsvIo, MissingFile) {
  EXPECT_THROW(read_points(fs::path("/nonexistent/achull.csv")), ValidationError);
}

}  // namespace
}  // namespace achull
