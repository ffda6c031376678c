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

// In-process implementations of the CLI subcommands. Each command validates
// its whole configuration before doing any work, writes its files only when
// an output directory is given, and returns the computed artifacts.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "achull/bounds.hpp"
#include "achull/compression.hpp"
#include "achull/datagen.hpp"
#include "achull/directions.hpp"
#include "achull/error_metrics.hpp"
#include "achull/sketch.hpp"

namespace achull {

/// Where the points come from: a CSV file or a generator.
struct InputSpec {
  std::filesystem::path path;
  std::optional<ShapeSpec> generator;

  PointCloud load() const;
  nlohmann::json describe() const;
};

struct SketchConfig {
  InputSpec input;
  std::size_t n_dirs = 1000;
  double alpha = 0.0;
  FilterMode mode = FilterMode::Hard;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;  // empty: write nothing

  void validate() const;
};

struct SketchRun {
  PointCloud cloud;
  DirectionSet dirs;
  CurvatureSketch sketch;
  InnerHull inner;
  OuterHull outer;
  double runtime_ms = 0.0;
  std::vector<std::string> warnings;
  nlohmann::json summary;
};

/// Files: inner.csv (kept points plus a K_D column), halfspaces.csv,
/// sketch.json, summary.json.
SketchRun cmd_sketch(const SketchConfig& config);

struct CompressConfig {
  SketchConfig sketch;
  double beta = 0.0;
  CurvatureOrder order = CurvatureOrder::Decreasing;
  bool hyperplanes = false;
  HyperplaneOptions hyperplane;
  std::optional<std::size_t> true_vertices;  // else computed at oracle scale
  std::optional<std::size_t> true_planes;    // else known only in 2-D
  std::size_t oracle_limit = 10000;

  void validate() const;
};

struct CompressRun {
  SketchRun base;
  VertexCompression vertices;
  std::optional<HyperplaneCompression> planes;
  std::optional<CompressionRatios> ratios;
  nlohmann::json summary;
};

/// Files: vertices.csv (same layout as inner.csv), clusters.json,
/// ratios.json, summary.json and, with hyperplanes, compressed_halfspaces.csv.
CompressRun cmd_compress(const CompressConfig& config);

struct ErrorConfig {
  SketchConfig sketch;
  std::size_t n_probes = 2000;
  double tol = kDefaultTol;
  std::size_t oracle_limit = 10000;

  void validate() const;
};

/// Inner and outer error of one sketch run against the exact extreme points.
/// Files: errors.json.
ErrorReport cmd_error(const ErrorConfig& config);

struct BenchConfig {
  InputSpec input;
  std::vector<std::size_t> schedule;  // strictly increasing direction counts
  double alpha = 0.0;
  FilterMode mode = FilterMode::Hard;
  std::uint64_t seed = 0;
  std::size_t n_probes = 2000;
  double tol = kDefaultTol;
  std::size_t oracle_limit = 10000;
  std::size_t reference_factor = 10;  // reference run size above oracle scale
  std::filesystem::path out;          // CSV file; empty: write nothing

  void validate() const;
};

struct BenchRow {
  std::size_t n_dirs = 0;
  std::size_t n_found = 0;
  std::size_t n_kept = 0;
  double inner_error = 0.0;
  double outer_error = 0.0;  // +inf when the outer hull is unbounded
  OuterErrorMethod method = OuterErrorMethod::Exact2d;
};

/// One row per schedule entry. Directions are prefixes of one sampled set,
/// so every row equals a standalone run with that many directions.
std::vector<BenchRow> cmd_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

struct BoundsConfig {
  bounds::BoundQuery query;
  double curvature = 0.25;     // K for the Chebyshev bound
  std::uint64_t n_dirs = 1000;  // |D| for the Chebyshev bound
  double theta = 1.0;          // cap angle
};

nlohmann::json cmd_bounds(const BoundsConfig& config);

enum class BoundSweep { Aleksandrov, DirectionCount };

/// Plot-ready curves: distance bound against omega for n = 2..5 (r from the
/// query), or direction count against omega for the query's p.
void cmd_bounds_sweep(std::ostream& out, BoundSweep sweep, const bounds::BoundQuery& query);

nlohmann::json to_json(const ErrorReport& report);

std::string version();

}  // namespace achull
