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

#include "achull/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "achull/errors.hpp"
#include "achull/rng.hpp"

namespace achull {
namespace {

void check_direction(std::span<const double> d, std::size_t dim) {
  if (d.size() != dim) throw ValidationError("support: dimension mismatch");
  for (double v : d) {
    if (!std::isfinite(v)) throw ValidationError("support: non-finite direction");
  }
}

// Random probe directions for the extreme-point pre-pass.
constexpr std::size_t kPrepassDirections = 256;
constexpr std::uint64_t kPrepassSeed = 0x0c0ffee5eedULL;

}  // namespace

SupportResult support(const PointCloud& cloud, std::span<const double> d) {
  check_direction(d, cloud.dim());
  SupportResult best{0, dot(cloud[0], d)};
  for (std::size_t i = 1; i < cloud.size(); ++i) {
    const double v = dot(cloud[i], d);
    if (v > best.value) best = {i, v};
  }
  return best;
}

double support_value(const VertexPolytope& hull, std::span<const double> d) {
  return support(hull.vertices(), d).value;
}

double directed_hausdorff(const VertexPolytope& from, const VertexPolytope& to,
                          double tol) {
  if (from.dim() != to.dim()) throw ValidationError("hausdorff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    worst = std::max(worst, min_norm_point(from.vertices()[i], to, tol).distance);
  }
  return worst;
}

double hausdorff(const VertexPolytope& p, const VertexPolytope& q, double tol) {
  return std::max(directed_hausdorff(p, q, tol), directed_hausdorff(q, p, tol));
}

std::vector<std::size_t> exact_extreme_points(const PointCloud& cloud, double tol) {
  if (!(tol > 0.0)) throw ValidationError("exact_extreme_points: tol must be positive");
  const std::size_t count = cloud.size();
  const std::size_t n = cloud.dim();
  if (count == 1) return {0};

  // Support winners over the coordinate axes and some random directions.
  std::vector<bool> is_winner(count, false);
  std::vector<double> d(n);
  auto mark = [&] { is_winner[support(cloud, d).index] = true; };
  for (std::size_t k = 0; k < n; ++k) {
    std::fill(d.begin(), d.end(), 0.0);
    d[k] = 1.0;
    mark();
    d[k] = -1.0;
    mark();
  }
  Rng rng(kPrepassSeed);
  for (std::size_t t = 0; t < kPrepassDirections; ++t) {
    for (std::size_t k = 0; k < n; k += 2) {
      auto [a, b] = rng.normal_pair();
      d[k] = a;
      if (k + 1 < n) d[k + 1] = b;
    }
    mark();
  }
  std::vector<std::size_t> winners;
  for (std::size_t i = 0; i < count; ++i) {
    if (is_winner[i]) winners.push_back(i);
  }

  // Points inside CH(winners) cannot be extreme: the winners are among their
  // "other" points. The survivors plus the winners span CH(all) up to
  // prepass_tol.
  const double prepass_tol = tol / 16.0;
  std::vector<bool> candidate = is_winner;
  for (std::size_t i = 0; i < count; ++i) {
    if (is_winner[i]) continue;
    if (min_norm_point(cloud[i], cloud, winners, prepass_tol).distance > prepass_tol) {
      candidate[i] = true;
    }
  }
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < count; ++i) {
    if (candidate[i]) candidates.push_back(i);
  }

  std::vector<std::size_t> all(count);
  std::iota(all.begin(), all.end(), std::size_t{0});

  std::vector<std::size_t> extreme;
  std::vector<std::size_t> others;
  for (std::size_t i : candidates) {
    // A winner may be a duplicate of another point, so winners are checked
    // against the full cloud.
    const std::vector<std::size_t>& pool = is_winner[i] ? all : candidates;
    others.clear();
    for (std::size_t j : pool) {
      if (j != i) others.push_back(j);
    }
    if (others.empty() ||
        min_norm_point(cloud[i], cloud, others, tol).distance > tol) {
      extreme.push_back(i);
    }
  }
  return extreme;
}

}  // namespace achull
