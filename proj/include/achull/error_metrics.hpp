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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "achull/directions.hpp"
#include "achull/geometry.hpp"
#include "achull/types.hpp"

namespace achull {

enum class OuterErrorMethod { Exact2d, SupportGapEstimate };

const char* to_string(OuterErrorMethod method) noexcept;

struct OuterErrorResult {
  double value = 0.0;
  OuterErrorMethod method = OuterErrorMethod::Exact2d;
  std::size_t n_probes = 0;  // 0 for the exact method
};

struct ErrorReport {
  double inner_error = 0.0;
  double outer_error = 0.0;
  OuterErrorMethod outer_method = OuterErrorMethod::Exact2d;
  std::size_t n_probes = 0;
  std::size_t n_dirs_used = 0;
  std::size_t n_found = 0;
  std::size_t n_kept = 0;
  std::vector<std::string> warnings;
};

/// sup over the true hull of the distance to CH(inner). Only the true
/// extreme points need checking.
double inner_error(const VertexPolytope& true_extremes, const VertexPolytope& inner,
                   double tol = kDefaultTol);

/// Same with both hulls given as index sets into one cloud. Throws
/// ValidationError if `inner` is empty.
double inner_error(const PointCloud& cloud, std::span<const std::size_t> true_extremes,
                   std::span<const std::size_t> inner, double tol = kDefaultTol);

/// Number of inner vertices farther than tol from CH(true_extremes); nonzero
/// means the inputs are inconsistent.
std::size_t count_outside(const VertexPolytope& true_extremes, const VertexPolytope& inner,
                          double tol = kDefaultTol);

/// sup over the outer hull of the distance to CH(true). Exact in 2-D (vertex
/// enumeration); otherwise the support-gap estimate over `probes`. Throws
/// UnboundedError if the outer hull is unbounded.
OuterErrorResult outer_error(const OuterHull& outer, const VertexPolytope& true_extremes,
                             const DirectionSet& probes, double tol = kDefaultTol);

/// Vertices of a bounded 2-D halfspace intersection, counter-clockwise.
/// Repeated vertices may appear where several constraints meet.
std::vector<std::array<double, 2>> outer_polygon_2d(const OuterHull& outer);

double outer_error_exact_2d(const OuterHull& outer, const VertexPolytope& true_extremes,
                            double tol = kDefaultTol);

/// max over probes of h_outer(d) - h_true(d). For nested convex bodies this
/// approaches the Hausdorff distance from below as the probes get dense.
double outer_error_support_gap(const OuterHull& outer, const VertexPolytope& true_extremes,
                               const DirectionSet& probes);

}  // namespace achull
