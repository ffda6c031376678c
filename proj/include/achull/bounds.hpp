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

namespace achull::bounds {

// Curvatures here are always relative: the fraction of the sphere's measure
// covered by a normal cone, so a value in [0, 1].

/// Parameters shared by the direction-count calculators.
struct BoundQuery {
  std::size_t n = 3;        // dimension, >= 2
  double r = 1.0;           // radius of a ball containing the data
  double omega = 0.01;      // relative curvature, in (0, 1)
  double p = 0.05;          // failure probability, in (0, 1)
  double eps = 0.1;         // error target, > 0
  std::uint64_t x_count = 1;  // number of true extreme points, >= 1

  /// Throws ValidationError when a field is outside its range.
  void validate() const;
};

/// Surface measure of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(std::size_t n);

/// P(|K_D(v) - K(v)| > eps) <= min(1, K(1-K) / (M eps^2)).
double chebyshev_bound(double curvature, std::uint64_t n_dirs, double eps);

/// Directions needed so that, with probability >= 1 - p, every extreme point
/// of relative curvature >= omega is found: ceil(log(omega p) / log(1 - omega)),
/// at least 1.
std::uint64_t direction_count_bound(double omega, double p);

/// Unrounded log(omega p) / log(1 - omega), for plotting.
double direction_count_raw(double omega, double p);

/// Lower bound (1/2) sin(theta/2)^{n-1} on the relative measure of a
/// spherical cap of angular radius theta in S^{n-1}.
double cap_lower_bound(double theta, std::size_t n);

/// Hausdorff distance incurred by deleting vertices of total relative
/// curvature omega from a polytope inside a ball of radius r:
/// sqrt(2) pi r (2 omega)^{1/(n-1)}.
double aleksandrov_bound(double r, std::size_t n, double omega);

enum class InnerErrorVariant {
  WorstCase,    // missed curvature may add up over all x_count points
  SinglePoint,  // treat the missed curvature as if it were one point's
};

/// Directions needed for inner error <= eps with probability >= 1 - p.
///
/// C = (eps / (sqrt(2) pi r))^{n-1} / (2 |X| area(S^{n-1})) and the count is
/// ceil(log(C p) / log(1 - C)). Returns 1 when C >= 1, when C p >= 1, or when
/// eps already exceeds the largest distance the Aleksandrov estimate can
/// produce. Evaluated in log space; saturates at UINT64_MAX.
std::uint64_t directions_for_inner_error(const BoundQuery& q, InnerErrorVariant variant);

/// Unrounded version of the above (may exceed 2^64).
double directions_for_inner_error_raw(const BoundQuery& q, InnerErrorVariant variant);

}  // namespace achull::bounds
