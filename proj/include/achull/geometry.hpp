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
#include <span>
#include <vector>

#include "achull/types.hpp"

namespace achull {

inline constexpr double kDefaultTol = 1e-9;

struct SupportResult {
  std::size_t index = 0;
  double value = 0.0;
};

/// Point of `cloud` maximizing x . d. Ties go to the smallest index.
SupportResult support(const PointCloud& cloud, std::span<const double> d);

/// max over vertices of v . d.
double support_value(const VertexPolytope& hull, std::span<const double> d);

struct MinNormResult {
  std::vector<double> closest;        // point of the hull
  double distance = 0.0;              // |x - closest|, an upper bound
  double lower_bound = 0.0;           // separating-hyperplane lower bound
  std::vector<std::size_t> support;   // vertex indices with positive weight
  std::vector<double> weights;        // convex weights, same order as support
  std::size_t iterations = 0;
};

/// Closest point of CH(hull) to x, by Wolfe's min-norm-point method.
///
/// Terminates once `distance - lower_bound <= tol`, so the returned distance
/// is within tol of the true one. The objective is non-increasing across
/// iterations. Throws ConvergenceError after 10 * N * n major iterations.
MinNormResult min_norm_point(std::span<const double> x,
                             const VertexPolytope& hull,
                             double tol = kDefaultTol);

/// Same, over CH of the selected rows of `cloud` (no copy). The indices in
/// the result refer to positions in `cloud`.
MinNormResult min_norm_point(std::span<const double> x, const PointCloud& cloud,
                             std::span<const std::size_t> indices,
                             double tol = kDefaultTol);

/// Hausdorff distance of CH(p) and CH(q). Only vertices are examined: the
/// farthest point of a polytope from a convex set is attained at a vertex.
double hausdorff(const VertexPolytope& p, const VertexPolytope& q,
                 double tol = kDefaultTol);

/// max over vertices of `from` of d(v, CH(to)).
double directed_hausdorff(const VertexPolytope& from, const VertexPolytope& to,
                          double tol = kDefaultTol);

/// Ground-truth extreme points: i is returned iff d(p_i, CH(others)) > tol.
/// Sorted ascending. Meant for clouds up to about 10^4 points.
///
/// A cheap pre-pass discards points that already lie inside the hull of a
/// few hundred support winners; the survivors are tested against each other
/// plus those winners, which spans the same hull as all other points.
std::vector<std::size_t> exact_extreme_points(const PointCloud& cloud,
                                              double tol = kDefaultTol);

}  // namespace achull
