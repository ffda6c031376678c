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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "achull/directions.hpp"
#include "achull/types.hpp"

namespace achull {

/// Which point wins each direction, and how often each point wins.
///
/// counts[v] is |D_v|, the number of directions whose argmax over the cloud is
/// v; the relative D-curvature is counts[v] / n_dirs. Every direction has
/// exactly one winner (smallest index on ties), so the counts sum to n_dirs.
struct CurvatureSketch {
  std::size_t dim = 0;
  std::size_t n_points = 0;
  std::size_t n_dirs = 0;
  std::vector<std::size_t> assignment;   // per direction: winning point
  std::vector<double> support_values;    // per direction: winning dot product
  std::vector<std::uint64_t> counts;     // per point

  /// Indices of points with a positive count (the D-hull), ascending.
  std::vector<std::size_t> found() const;

  /// Direction indices won by v, ascending.
  std::vector<std::size_t> directions_of(std::size_t v) const;
};

struct SketchOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Runs the direction loop. The result does not depend on the thread count.
CurvatureSketch build_sketch(const PointCloud& cloud, const DirectionSet& dirs,
                             const SketchOptions& options = {});

/// Sketch of concat(dirs_of(base), extra) computed by only scanning `extra`.
CurvatureSketch extend_sketch(const CurvatureSketch& base, const PointCloud& cloud,
                              const DirectionSet& extra,
                              const SketchOptions& options = {});

/// K_D(v) = counts[v] / n_dirs.
double relative_curvature(const CurvatureSketch& sketch, std::size_t v);

enum class FilterMode {
  Hard,          // keep exactly the points with K_D(v) > alpha
  Proportional,  // also keep 0 < K_D(v) <= alpha with probability K_D(v)/alpha
};

struct InnerHull {
  std::vector<std::size_t> kept;   // ascending point indices
  std::vector<double> curvatures;  // K_D per kept index
  double alpha = 0.0;
  FilterMode mode = FilterMode::Hard;
};

/// Deletes points with K_D(v) <= alpha. Points with zero count are never
/// kept. In proportional mode one uniform draw is consumed per point in
/// 0 < K_D(v) <= alpha, in index order.
InnerHull threshold_filter(const CurvatureSketch& sketch, double alpha,
                           FilterMode mode = FilterMode::Hard,
                           std::uint64_t seed = 0);

/// One halfspace d_j . x <= max_v d_j . v per direction.
OuterHull outer_hull(const CurvatureSketch& sketch, const PointCloud& cloud,
                     const DirectionSet& dirs);

}  // namespace achull
