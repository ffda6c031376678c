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
#include <random>

#include "achull/errors.hpp"
#include "achull/geometry.hpp"
#include "oracles.hpp"

namespace achull {
namespace {

using oracle::P2;

// Distances below are certified to kDefaultTol; comparisons against analytic
// values allow a little more for rounding in the oracle itself.
constexpr double kTol = 1e-8;

TEST(PointCloud, RejectsMalformedInput) {
  EXPECT_THROW(PointCloud(0, {1.0}), ValidationError);
  EXPECT_THROW(PointCloud(2, {}), ValidationError);
  EXPECT_THROW(PointCloud(2, {1.0, 2.0, 3.0}), ValidationError);
  EXPECT_THROW(PointCloud(2, {1.0, NAN}), ValidationError);
  EXPECT_THROW(PointCloud::from_rows({{1.0, 2.0}, {3.0}}), ValidationError);
}

TEST(PointCloud, SubsetKeepsOrder) {
  const auto c = PointCloud::from_rows({{0, 0}, {1, 2}, {3, 4}});
  const std::vector<std::size_t> idx{2, 0};
  const auto s = c.subset(idx);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0][0], 3.0);
  EXPECT_EQ(s[1][1], 0.0);
  EXPECT_DOUBLE_EQ(c.radius(), 5.0);
}

TEST(Support, AxisAlignedArgmax) {
  const auto c = PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}});
  const std::vector<double> d{1, 0};
  const auto r = support(c, d);
  EXPECT_EQ(r.index, 1u);
  EXPECT_EQ(r.value, 1.0);
}

TEST(Support, Diagonal) {
  const auto c = PointCloud::from_rows({{-1, -1}, {1, 1}});
  const std::vector<double> d{1, 1};
  const auto r = support(c, d);
  EXPECT_EQ(r.index, 1u);
  EXPECT_EQ(r.value, 2.0);
}

TEST(Support, TiesGoToSmallestIndex) {
  const auto c = PointCloud::from_rows({{0, 1}, {1, 1}, {-1, 1}});
  const std::vector<double> d{0, 1};
  EXPECT_EQ(support(c, d).index, 0u);
}

TEST(Support, MatchesExhaustiveScan) {
  const auto c = oracle::random_cloud(3, 1000, 17, 0.0, 1.0);
  std::mt19937_64 g(5);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 200; ++t) {
    std::vector<double> d{nd(g), nd(g), nd(g)};
    if (t == 0) d = {1, 0, 0};
    const auto r = support(c, d);
    const std::size_t want = oracle::brute_support(c, d);
    EXPECT_EQ(r.index, want);
    EXPECT_EQ(r.value, oracle::dot(oracle::row(c, want), d));
  }
}

TEST(Support, PermutationChangesOnlyTheIndex) {
  const auto c = oracle::random_cloud(4, 300, 3);
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(9));
  const auto p = c.subset(perm);
  std::mt19937_64 g(11);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 50; ++t) {
    const std::vector<double> d{nd(g), nd(g), nd(g), nd(g)};
    const auto a = support(c, d);
    const auto b = support(p, d);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(perm[b.index], a.index);
  }
}

TEST(Support, Errors) {
  const auto c = oracle::square();
  const std::vector<double> wrong{1, 0, 0};
  const std::vector<double> nan{NAN, 0};
  EXPECT_THROW(support(c, wrong), ValidationError);
  EXPECT_THROW(support(c, nan), ValidationError);
}

TEST(SupportValue, Square) {
  const VertexPolytope sq(oracle::square());
  const std::vector<double> e1{1, 0};
  const std::vector<double> diag{1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
  EXPECT_DOUBLE_EQ(support_value(sq, e1), 1.0);
  EXPECT_NEAR(support_value(sq, diag), std::sqrt(2.0), 1e-15);
  const std::vector<double> bad{1, 0, 0};
  EXPECT_THROW(support_value(sq, bad), ValidationError);
}

TEST(SupportValue, AgreesWithSupport) {
  const auto c = oracle::random_cloud(5, 40, 21);
  const VertexPolytope p(c);
  const std::vector<double> d{0.3, -0.2, 0.9, 0.1, -0.5};
  EXPECT_EQ(support_value(p, d), support(c, d).value);
}

TEST(MinNormPoint, SegmentEndpoint) {
  const VertexPolytope seg(PointCloud::from_rows({{0, 0}, {1, 0}}));
  const std::vector<double> x{2, 0};
  EXPECT_NEAR(min_norm_point(x, seg).distance, 1.0, kTol);
}

TEST(MinNormPoint, TriangleHypotenuse) {
  const VertexPolytope tri(PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}}));
  const std::vector<double> x{1, 1};
  const auto r = min_norm_point(x, tri);
  EXPECT_NEAR(r.distance, 1.0 / std::sqrt(2.0), kTol);
  // Grid oracle: converges from above, within one grid step.
  const double grid = oracle::grid_triangle_dist({1, 1}, {0, 0}, {1, 0}, {0, 1}, 400);
  EXPECT_LE(r.distance, grid + kTol);
  EXPECT_GE(r.distance, grid - 1.0 / 400);
  EXPECT_NEAR(r.closest[0], 0.5, kTol);
  EXPECT_NEAR(r.closest[1], 0.5, kTol);
}

TEST(MinNormPoint, InsideIsZero) {
  const VertexPolytope tri(PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}}));
  const std::vector<double> x{0.2, 0.3};
  EXPECT_LE(min_norm_point(x, tri).distance, kDefaultTol);
}

TEST(MinNormPoint, Errors) {
  const VertexPolytope tri(PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}}));
  const std::vector<double> x{0.2, 0.3};
  const std::vector<double> bad{0.2, 0.3, 0.0};
  EXPECT_THROW(min_norm_point(x, tri, 0.0), ValidationError);
  EXPECT_THROW(min_norm_point(bad, tri), ValidationError);
}

TEST(MinNormPoint, MatchesPolygonOracleIn2d) {
  std::mt19937_64 g(99);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 40; ++t) {
    const auto c = oracle::random_cloud(2, 30, 1000 + t);
    const VertexPolytope p(c);
    const auto pts = oracle::to_p2(c);
    for (int q = 0; q < 10; ++q) {
      const P2 x{u(g), u(g)};
      const std::vector<double> xv{x[0], x[1]};
      const auto r = min_norm_point(xv, p);
      EXPECT_NEAR(r.distance, oracle::hull_dist_2d(x, pts), kTol);
    }
  }
}

TEST(MinNormPoint, CertifiedInHigherDimensions) {
  // Optimality oracle: y is the projection of x onto CH(V) iff
  // (x - y).(v - y) <= 0 for every vertex v.
  std::mt19937_64 g(7);
  std::normal_distribution<double> nd(0.0, 2.0);
  for (std::size_t n : {3u, 5u, 8u}) {
    const auto c = oracle::random_cloud(n, 60, 50 + n);
    const VertexPolytope p(c);
    for (int q = 0; q < 20; ++q) {
      std::vector<double> x(n);
      for (double& v : x) v = nd(g);
      const auto r = min_norm_point(x, p);
      double wsum = 0;
      std::vector<double> recon(n, 0.0);
      for (std::size_t k = 0; k < r.support.size(); ++k) {
        EXPECT_GE(r.weights[k], -1e-12);
        wsum += r.weights[k];
        for (std::size_t i = 0; i < n; ++i) recon[i] += r.weights[k] * c[r.support[k]][i];
      }
      EXPECT_NEAR(wsum, 1.0, 1e-9);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(recon[i], r.closest[i], 1e-9);
      EXPECT_LE(r.lower_bound, r.distance + 1e-15);
      EXPECT_LE(r.distance - r.lower_bound, kDefaultTol);
      for (std::size_t v = 0; v < c.size(); ++v) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += (x[i] - r.closest[i]) * (c[v][i] - r.closest[i]);
        EXPECT_LE(s, 1e-7) << "vertex " << v;
      }
    }
  }
}

TEST(Hausdorff, IdentityIsZero) {
  const VertexPolytope sq(oracle::square());
  EXPECT_LE(hausdorff(sq, sq), kDefaultTol);
}

TEST(Hausdorff, SquareVersusTriangle) {
  const VertexPolytope sq(PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  const VertexPolytope tri(PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}}));
  const double h = hausdorff(sq, tri);
  EXPECT_NEAR(h, 1.0 / std::sqrt(2.0), kTol);
  const double grid = oracle::grid_triangle_dist({1, 1}, {0, 0}, {1, 0}, {0, 1}, 400);
  EXPECT_NEAR(h, grid, 1.0 / 400);
  // Triangle inside square: one-sided case.
  EXPECT_LE(directed_hausdorff(tri, sq), kDefaultTol);
  EXPECT_NEAR(h, directed_hausdorff(sq, tri), kTol);
}

TEST(Hausdorff, MetricProperties) {
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 2 + t % 3;
    const VertexPolytope a(oracle::random_cloud(n, 12, 300 + t));
    const VertexPolytope b(oracle::random_cloud(n, 9, 400 + t));
    const VertexPolytope c(oracle::random_cloud(n, 15, 500 + t));
    const double ab = hausdorff(a, b), ba = hausdorff(b, a);
    const double bc = hausdorff(b, c), ac = hausdorff(a, c);
    EXPECT_GE(ab, 0.0);
    EXPECT_NEAR(ab, ba, 2 * kDefaultTol);
    EXPECT_LE(ac, ab + bc + 2 * kDefaultTol);
  }
}

TEST(ExactExtremePoints, SquareWithCentroid) {
  const auto c = PointCloud::from_rows({{-1, -1}, {1, -1}, {0, 0}, {1, 1}, {-1, 1}});
  EXPECT_EQ(exact_extreme_points(c), (std::vector<std::size_t>{0, 1, 3, 4}));
}

TEST(ExactExtremePoints, Collinear) {
  const auto c = PointCloud::from_rows({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(exact_extreme_points(c), (std::vector<std::size_t>{0, 2}));
}

TEST(ExactExtremePoints, SinglePoint) {
  EXPECT_EQ(exact_extreme_points(PointCloud::from_rows({{3, 4}})), (std::vector<std::size_t>{0}));
}

TEST(ExactExtremePoints, MatchesMonotoneChainInTriangle) {
  std::mt19937_64 g(4242);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::vector<double>> rows;
    while (rows.size() < 200) {
      const double x = u(g), y = u(g);
      if (x + y <= 1) rows.push_back({x, y});
    }
    const auto c = PointCloud::from_rows(rows);
    auto want = oracle::monotone_chain(oracle::to_p2(c));
    std::sort(want.begin(), want.end());
    EXPECT_EQ(exact_extreme_points(c), want);
  }
}

TEST(ExactExtremePoints, InvariantToInteriorPoints) {
  const auto c = oracle::random_cloud(3, 150, 77);
  const auto base = exact_extreme_points(c);
  // Append convex combinations of existing points.
  std::vector<double> coords(c.coords().begin(), c.coords().end());
  std::mt19937_64 g(8);
  std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
  for (int k = 0; k < 100; ++k) {
    const auto a = c[pick(g)], b = c[pick(g)], d = c[pick(g)];
    for (std::size_t i = 0; i < 3; ++i) coords.push_back(0.3 * a[i] + 0.3 * b[i] + 0.4 * d[i]);
  }
  EXPECT_EQ(exact_extreme_points(PointCloud(3, std::move(coords))), base);
}

TEST(ExactExtremePoints, CubeCornersAmongInteriorPoints) {
  std::vector<std::vector<double>> rows;
  for (int m = 0; m < 8; ++m) rows.push_back({double(m & 1), double((m >> 1) & 1), double(m >> 2)});
  const auto inner = oracle::random_cloud(3, 500, 31, 0.01, 0.99);
  for (std::size_t i = 0; i < inner.size(); ++i) rows.push_back(oracle::row(inner, i));
  const auto got = exact_extreme_points(PointCloud::from_rows(rows));
  EXPECT_EQ(got, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(ExactExtremePoints, AllSpherePointsAreExtreme) {
  std::mt19937_64 g(12);
  std::normal_distribution<double> nd;
  std::vector<std::vector<double>> rows;
  for (int k = 0; k < 300; ++k) {
    std::vector<double> v{nd(g), nd(g), nd(g), nd(g)};
    const double len = std::sqrt(oracle::dot(v, v));
    for (double& x : v) x /= len;
    rows.push_back(v);
  }
  EXPECT_EQ(exact_extreme_points(PointCloud::from_rows(rows)).size(), 300u);
}

}  // namespace
}  // namespace achull
