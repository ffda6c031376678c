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

#include <cmath>
#include <numbers>

#include "achull/bounds.hpp"
#include "achull/directions.hpp"
#include "achull/errors.hpp"

namespace achull::bounds {
namespace {

using std::numbers::pi;

// Direct evaluation of the direction-count formula with plain arithmetic,
// valid while C is not tiny enough to lose log(1 - C) to rounding.
double naive_inner_directions(std::size_t n, double r, double eps, double p, double points) {
  const double area = 2 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
  const double c = std::pow(eps / (std::sqrt(2.0) * pi * r), n - 1.0) / (2 * points * area);
  return std::log(c * p) / std::log(1 - c);
}

TEST(SphereArea, KnownValues) {
  EXPECT_NEAR(sphere_area(2), 2 * pi, 1e-14);
  EXPECT_NEAR(sphere_area(3), 4 * pi, 1e-14);
  EXPECT_NEAR(sphere_area(4), 2 * pi * pi, 1e-13);
}

TEST(Chebyshev, Values) {
  EXPECT_NEAR(chebyshev_bound(0.25, 1000, 0.05), 0.075, 1e-15);
  EXPECT_LT(chebyshev_bound(0.5, 1'000'000'000'000ULL, 0.05), 1e-9);
  EXPECT_EQ(chebyshev_bound(0.5, 1, 0.01), 1.0);
  EXPECT_THROW(chebyshev_bound(0.0, 10, 0.1), ValidationError);
  EXPECT_THROW(chebyshev_bound(1.0, 10, 0.1), ValidationError);
  EXPECT_THROW(chebyshev_bound(0.5, 0, 0.1), ValidationError);
  EXPECT_THROW(chebyshev_bound(0.5, 10, 0.0), ValidationError);
}

TEST(Chebyshev, DecreasingInM) {
  double prev = 2.0;
  for (std::uint64_t m = 10; m < 1'000'000; m *= 3) {
    const double b = chebyshev_bound(0.3, m, 0.05);
    EXPECT_LE(b, prev);
    prev = b;
  }
}

TEST(DirectionCount, Values) {
  EXPECT_NEAR(direction_count_raw(0.25, 0.05), std::log(0.0125) / std::log(0.75), 1e-12);
  EXPECT_NEAR(direction_count_raw(0.25, 0.05), 15.24, 0.01);
  EXPECT_EQ(direction_count_bound(0.25, 0.05), 16u);
  // 4 corners each missed with probability 0.75^16.
  EXPECT_LE(4 * std::pow(0.75, 16), 0.05);
  EXPECT_EQ(direction_count_bound(1.0 - 1e-12, 0.5), 1u);
  EXPECT_THROW(direction_count_bound(0.0, 0.5), ValidationError);
  EXPECT_THROW(direction_count_bound(0.5, 1.0), ValidationError);
}

TEST(DirectionCount, Monotone) {
  for (double p : {0.01, 0.05, 0.2}) {
    std::uint64_t prev = UINT64_MAX;
    for (double w = 0.001; w < 1; w *= 1.5) {
      const auto c = direction_count_bound(w, p);
      EXPECT_LE(c, prev);
      prev = c;
    }
  }
  for (double w : {0.01, 0.1}) {
    EXPECT_GE(direction_count_bound(w, 0.01), direction_count_bound(w, 0.1));
  }
}

TEST(DirectionCount, GrowsLikeInverseOmega) {
  // omega * count stays within a constant band as omega shrinks.
  for (double w = 1e-2; w > 1e-6; w /= 10) {
    const double scaled = w * direction_count_raw(w, 0.05);
    EXPECT_GT(scaled, -std::log(0.05 * w) * 0.9);
    EXPECT_LT(scaled, -std::log(0.05 * w) * 1.1);
  }
}

TEST(CapBound, Values) {
  EXPECT_DOUBLE_EQ(cap_lower_bound(pi, 2), 0.5);
  EXPECT_DOUBLE_EQ(cap_lower_bound(pi, 7), 0.5);
  EXPECT_EQ(cap_lower_bound(0.0, 3), 0.0);
  EXPECT_NEAR(cap_lower_bound(pi / 2, 2), 0.5 * std::sin(pi / 4), 1e-15);
  EXPECT_THROW(cap_lower_bound(-0.1, 3), ValidationError);
  EXPECT_THROW(cap_lower_bound(4.0, 3), ValidationError);
}

TEST(CapBound, BelowMonteCarloCapMeasure) {
  // Fraction of uniform directions within angle theta of a fixed axis.
  constexpr std::size_t kSamples = 200000;
  for (std::size_t n : {2u, 3u, 5u}) {
    const auto d = sample_uniform(kSamples, n, 40 + n);
    for (double theta : {0.3, 1.0, pi / 2, 2.5}) {
      std::size_t in = 0;
      for (std::size_t j = 0; j < d.size(); ++j) in += d[j][0] >= std::cos(theta);
      const double measured = static_cast<double>(in) / kSamples;
      EXPECT_LE(cap_lower_bound(theta, n), measured + 0.005) << "n=" << n << " theta=" << theta;
      if (n == 2) {
        EXPECT_NEAR(measured, theta / pi, 0.005);
      }
    }
  }
}

TEST(Aleksandrov, Values) {
  EXPECT_NEAR(aleksandrov_bound(1.0, 2, 0.01), std::sqrt(2.0) * pi * 0.02, 1e-15);
  EXPECT_NEAR(aleksandrov_bound(1.0, 2, 0.01), 0.08886, 1e-5);
  EXPECT_EQ(aleksandrov_bound(1.0, 3, 0.0), 0.0);
  EXPECT_THROW(aleksandrov_bound(0.0, 3, 0.1), ValidationError);
  EXPECT_THROW(aleksandrov_bound(1.0, 1, 0.1), ValidationError);
}

TEST(Aleksandrov, IncreasingInOmegaAndR) {
  for (std::size_t n : {2u, 3u, 6u}) {
    EXPECT_LT(aleksandrov_bound(1.0, n, 0.01), aleksandrov_bound(1.0, n, 0.02));
    EXPECT_LT(aleksandrov_bound(1.0, n, 0.01), aleksandrov_bound(2.0, n, 0.01));
  }
}

TEST(InnerErrorDirections, WorstCaseTable) {
  // Published orders of magnitude for p = 0.05, eps = 0.1, r = 1, 10^4 points.
  const int expected[] = {10, 11, 13, 15, 17};
  for (std::size_t n = 3; n <= 7; ++n) {
    BoundQuery q{n, 1.0, 0.01, 0.05, 0.1, 10000};
    const double raw = directions_for_inner_error_raw(q, InnerErrorVariant::WorstCase);
    EXPECT_NEAR(std::floor(std::log10(raw)), expected[n - 3], 1.0) << "n=" << n;
  }
}

TEST(InnerErrorDirections, SinglePointTable) {
  const int expected[] = {5, 7, 9, 11, 13};
  for (std::size_t n = 3; n <= 7; ++n) {
    BoundQuery q{n, 1.0, 0.01, 0.05, 0.1, 10000};
    const double raw = directions_for_inner_error_raw(q, InnerErrorVariant::SinglePoint);
    EXPECT_NEAR(std::floor(std::log10(raw)), expected[n - 3], 1.0) << "n=" << n;
  }
}

TEST(InnerErrorDirections, MatchesDirectFormula) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (double eps : {0.5, 1.0, 2.0}) {
      BoundQuery q{n, 1.0, 0.01, 0.05, eps, 7};
      EXPECT_NEAR(directions_for_inner_error_raw(q, InnerErrorVariant::WorstCase),
                  naive_inner_directions(n, 1.0, eps, 0.05, 7), 1e-6 * naive_inner_directions(n, 1.0, eps, 0.05, 7));
      EXPECT_NEAR(directions_for_inner_error_raw(q, InnerErrorVariant::SinglePoint),
                  naive_inner_directions(n, 1.0, eps, 0.05, 1), 1e-6 * naive_inner_directions(n, 1.0, eps, 0.05, 1));
    }
  }
}

TEST(InnerErrorDirections, LargeEpsilonNeedsOneDirection) {
  for (std::size_t n : {2u, 3u, 5u}) {
    const double limit = std::sqrt(2.0) * pi * std::pow(2.0, 1.0 / (n - 1.0));
    BoundQuery q{n, 1.0, 0.01, 0.05, limit, 100};
    EXPECT_EQ(directions_for_inner_error(q, InnerErrorVariant::WorstCase), 1u);
    q.eps = 10 * limit;
    EXPECT_EQ(directions_for_inner_error(q, InnerErrorVariant::SinglePoint), 1u);
  }
}

TEST(InnerErrorDirections, MonotoneAndOrdered) {
  for (std::size_t n : {3u, 5u}) {
    std::uint64_t prev = UINT64_MAX;
    for (double eps = 0.01; eps < 5; eps *= 1.7) {
      BoundQuery q{n, 1.0, 0.01, 0.05, eps, 50};
      const auto w = directions_for_inner_error(q, InnerErrorVariant::WorstCase);
      const auto s = directions_for_inner_error(q, InnerErrorVariant::SinglePoint);
      EXPECT_LE(w, prev);
      EXPECT_GE(w, s);
      prev = w;
    }
  }
}

TEST(BoundQuery, Validation) {
  EXPECT_THROW((BoundQuery{1, 1, 0.1, 0.1, 0.1, 1}.validate()), ValidationError);
  EXPECT_THROW((BoundQuery{3, 0, 0.1, 0.1, 0.1, 1}.validate()), ValidationError);
  EXPECT_THROW((BoundQuery{3, 1, 1.0, 0.1, 0.1, 1}.validate()), ValidationError);
  EXPECT_THROW((BoundQuery{3, 1, 0.1, 0.0, 0.1, 1}.validate()), ValidationError);
  EXPECT_THROW((BoundQuery{3, 1, 0.1, 0.1, -1, 1}.validate()), ValidationError);
  EXPECT_THROW((BoundQuery{3, 1, 0.1, 0.1, 0.1, 0}.validate()), ValidationError);
  EXPECT_NO_THROW((BoundQuery{3, 1, 0.1, 0.1, 0.1, 1}.validate()));
}

}  // namespace
}  // namespace achull::bounds
