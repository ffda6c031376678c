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

#include "achull/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "achull/errors.hpp"

namespace achull::bounds {
namespace {

bool open_unit(double v) { return v > 0.0 && v < 1.0; }

std::uint64_t to_count(double raw) {
  if (!(raw > 1.0)) return 1;
  const double c = std::ceil(raw);
  if (c >= 18446744073709551615.0) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(c);
}

}  // namespace

void BoundQuery::validate() const {
  if (n < 2) throw ValidationError("bounds: dimension must be at least 2");
  if (!(r > 0.0) || !std::isfinite(r)) throw ValidationError("bounds: r must be positive");
  if (!open_unit(omega)) throw ValidationError("bounds: omega must lie in (0, 1)");
  if (!open_unit(p)) throw ValidationError("bounds: p must lie in (0, 1)");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ValidationError("bounds: eps must be positive");
  if (x_count < 1) throw ValidationError("bounds: extreme-point count must be >= 1");
}

double sphere_area(std::size_t n) {
  if (n < 1) throw ValidationError("sphere_area: dimension must be positive");
  const double half = static_cast<double>(n) / 2.0;
  return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double chebyshev_bound(double curvature, std::uint64_t n_dirs, double eps) {
  if (!open_unit(curvature)) throw ValidationError("chebyshev_bound: K must lie in (0, 1)");
  if (n_dirs < 1) throw ValidationError("chebyshev_bound: need at least one direction");
  if (!(eps > 0.0)) throw ValidationError("chebyshev_bound: eps must be positive");
  const double v = curvature * (1.0 - curvature) /
                   (static_cast<double>(n_dirs) * eps * eps);
  return std::min(1.0, v);
}

double direction_count_raw(double omega, double p) {
  if (!open_unit(omega) || !open_unit(p)) {
    throw ValidationError("direction_count_bound: omega and p must lie in (0, 1)");
  }
  return std::log(omega * p) / std::log1p(-omega);
}

std::uint64_t direction_count_bound(double omega, double p) {
  return to_count(direction_count_raw(omega, p));
}

double cap_lower_bound(double theta, std::size_t n) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw ValidationError("cap_lower_bound: theta must lie in [0, pi]");
  }
  if (n < 2) throw ValidationError("cap_lower_bound: dimension must be at least 2");
  return 0.5 * std::pow(std::sin(theta / 2.0), static_cast<double>(n - 1));
}

double aleksandrov_bound(double r, std::size_t n, double omega) {
  if (!(r > 0.0)) throw ValidationError("aleksandrov_bound: r must be positive");
  if (n < 2) throw ValidationError("aleksandrov_bound: dimension must be at least 2");
  if (!(omega >= 0.0 && omega <= 1.0)) {
    throw ValidationError("aleksandrov_bound: omega must lie in [0, 1]");
  }
  return std::numbers::sqrt2 * std::numbers::pi * r *
         std::pow(2.0 * omega, 1.0 / static_cast<double>(n - 1));
}

double directions_for_inner_error_raw(const BoundQuery& q, InnerErrorVariant variant) {
  q.validate();
  const double scale = std::numbers::sqrt2 * std::numbers::pi * q.r;
  const double dims = static_cast<double>(q.n - 1);
  if (q.eps >= scale * std::pow(2.0, 1.0 / dims)) return 1.0;

  const double points =
      variant == InnerErrorVariant::WorstCase ? static_cast<double>(q.x_count) : 1.0;
  const double log_c = dims * std::log(q.eps / scale) -
                       std::log(2.0 * points * sphere_area(q.n));
  if (log_c >= 0.0 || log_c + std::log(q.p) >= 0.0) return 1.0;
  // log(1 - C) via log1p keeps precision for C down to 1e-300.
  return (log_c + std::log(q.p)) / std::log1p(-std::exp(log_c));
}

std::uint64_t directions_for_inner_error(const BoundQuery& q, InnerErrorVariant variant) {
  return to_count(directions_for_inner_error_raw(q, variant));
}

}  // namespace achull::bounds
