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

#include "achull/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "achull/errors.hpp"
#include "achull/rng.hpp"

namespace achull {
namespace {

constexpr std::size_t kBlock = 256;

// Winners for directions [first, last) of `dirs`, written into out_* at the
// same positions. Points are scanned in index order with a strict comparison,
// so ties resolve to the smallest index.
void scan_block(const PointCloud& cloud, const DirectionSet& dirs, std::size_t first,
                std::size_t last, std::size_t* out_arg, double* out_val) {
  const std::size_t n = cloud.dim();
  const std::size_t width = last - first;
  alignas(64) double dir_t[16 * kBlock];
  std::vector<double> wide_dir_t;
  double* dt = dir_t;
  if (n > 16) {
    wide_dir_t.resize(n * kBlock);
    dt = wide_dir_t.data();
  }
  for (std::size_t j = 0; j < width; ++j) {
    const auto d = dirs[first + j];
    for (std::size_t k = 0; k < n; ++k) dt[k * kBlock + j] = d[k];
  }

  alignas(64) double acc[kBlock];
  alignas(64) double best[kBlock];
  alignas(64) std::uint64_t arg[kBlock];
  std::fill(best, best + width, -std::numeric_limits<double>::infinity());
  std::fill(arg, arg + width, std::uint64_t{0});

  const std::size_t count = cloud.size();
  for (std::size_t i = 0; i < count; ++i) {
    const double* p = cloud.row_ptr(i);
    const double p0 = p[0];
    for (std::size_t j = 0; j < width; ++j) acc[j] = p0 * dt[j];
    for (std::size_t k = 1; k < n; ++k) {
      const double pk = p[k];
      const double* row = dt + k * kBlock;
      for (std::size_t j = 0; j < width; ++j) acc[j] += pk * row[j];
    }
    const std::uint64_t idx = i;
    for (std::size_t j = 0; j < width; ++j) {
      const bool better = acc[j] > best[j];
      best[j] = better ? acc[j] : best[j];
      arg[j] = better ? idx : arg[j];
    }
  }
  for (std::size_t j = 0; j < width; ++j) {
    out_arg[j] = static_cast<std::size_t>(arg[j]);
    out_val[j] = best[j];
  }
}

void scan_all(const PointCloud& cloud, const DirectionSet& dirs, std::size_t* out_arg,
              double* out_val, unsigned threads) {
  const std::size_t m = dirs.size();
  const std::size_t blocks = (m + kBlock - 1) / kBlock;
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, blocks));

  auto run = [&](std::size_t worker) {
    for (std::size_t b = worker; b < blocks; b += workers) {
      const std::size_t first = b * kBlock;
      const std::size_t last = std::min(m, first + kBlock);
      scan_block(cloud, dirs, first, last, out_arg + first, out_val + first);
    }
  };
  if (workers <= 1) {
    run(0);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
}

}  // namespace

std::vector<std::size_t> CurvatureSketch::found() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    if (counts[v] > 0) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> CurvatureSketch::directions_of(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (assignment[j] == v) out.push_back(j);
  }
  return out;
}

CurvatureSketch build_sketch(const PointCloud& cloud, const DirectionSet& dirs,
                             const SketchOptions& options) {
  if (cloud.dim() != dirs.dim()) throw ValidationError("build_sketch: dimension mismatch");
  CurvatureSketch s;
  s.dim = cloud.dim();
  s.n_points = cloud.size();
  s.n_dirs = dirs.size();
  s.assignment.resize(s.n_dirs);
  s.support_values.resize(s.n_dirs);
  scan_all(cloud, dirs, s.assignment.data(), s.support_values.data(), options.threads);
  s.counts.assign(s.n_points, 0);
  for (std::size_t w : s.assignment) ++s.counts[w];
  return s;
}

CurvatureSketch extend_sketch(const CurvatureSketch& base, const PointCloud& cloud,
                              const DirectionSet& extra, const SketchOptions& options) {
  if (cloud.dim() != extra.dim() || cloud.dim() != base.dim ||
      cloud.size() != base.n_points) {
    throw ValidationError("extend_sketch: sketch, cloud and directions disagree");
  }
  CurvatureSketch s = base;
  const std::size_t old = base.n_dirs;
  s.n_dirs = old + extra.size();
  s.assignment.resize(s.n_dirs);
  s.support_values.resize(s.n_dirs);
  scan_all(cloud, extra, s.assignment.data() + old, s.support_values.data() + old,
           options.threads);
  for (std::size_t j = old; j < s.n_dirs; ++j) ++s.counts[s.assignment[j]];
  return s;
}

double relative_curvature(const CurvatureSketch& sketch, std::size_t v) {
  if (v >= sketch.n_points) throw ValidationError("relative_curvature: index out of range");
  return static_cast<double>(sketch.counts[v]) / static_cast<double>(sketch.n_dirs);
}

InnerHull threshold_filter(const CurvatureSketch& sketch, double alpha, FilterMode mode,
                           std::uint64_t seed) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("threshold_filter: alpha must lie in [0, 1]");
  }
  InnerHull out;
  out.alpha = alpha;
  out.mode = mode;
  Rng rng(seed);
  for (std::size_t v = 0; v < sketch.n_points; ++v) {
    if (sketch.counts[v] == 0) continue;
    const double k = relative_curvature(sketch, v);
    bool keep = k > alpha;
    if (!keep && mode == FilterMode::Proportional) keep = rng.uniform() < k / alpha;
    if (keep) {
      out.kept.push_back(v);
      out.curvatures.push_back(k);
    }
  }
  return out;
}

OuterHull outer_hull(const CurvatureSketch& sketch, const PointCloud& cloud,
                     const DirectionSet& dirs) {
  if (sketch.n_dirs != dirs.size() || sketch.n_points != cloud.size() ||
      sketch.dim != dirs.dim()) {
    throw ValidationError("outer_hull: sketch was not built from these inputs");
  }
  OuterHull hull;
  hull.dim = dirs.dim();
  hull.source = HullSource::RawSketch;
  hull.halfspaces.reserve(dirs.size());
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    const auto d = dirs[j];
    hull.halfspaces.push_back(
        {std::vector<double>(d.begin(), d.end()), sketch.support_values[j],
         sketch.assignment[j]});
  }
  return hull;
}

}  // namespace achull
