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
#include <numbers>
#include <optional>
#include <vector>

#include "achull/directions.hpp"
#include "achull/sketch.hpp"
#include "achull/types.hpp"

namespace achull {

/// Greedy clustering result. members[c] is E_v for representatives[c]: the
/// inner-hull points absorbed by it, the representative included and first.
struct ClusterMap {
  std::vector<std::size_t> representatives;
  std::vector<std::vector<std::size_t>> members;
};

/// F_v per representative: the union of the directions won by its members.
struct DirectionBundle {
  std::vector<std::vector<std::size_t>> directions;
};

enum class CurvatureOrder {
  Decreasing,  // default: each cluster is led by its highest-curvature member
  Increasing,  // the literal ordering of the original vertex compression pass
};

struct VertexCompression {
  InnerHull hull;
  ClusterMap clusters;
};

/// Greedy radius clustering of the inner hull. Points are visited in
/// curvature order (ties by index); each point still present is kept and
/// absorbs every other remaining point closer than beta. Guarantees
/// hausdorff(CH(inner), CH(result)) < beta. beta == 0 is the identity.
VertexCompression vertex_compress(const InnerHull& inner, const PointCloud& cloud,
                                  const CurvatureSketch& sketch, double beta,
                                  CurvatureOrder order = CurvatureOrder::Decreasing);

DirectionBundle direction_bundle(const ClusterMap& clusters,
                                 const CurvatureSketch& sketch);

enum class HyperplaneVariant { Recursive, GammaThreshold };

struct HyperplaneOptions {
  HyperplaneVariant variant = HyperplaneVariant::Recursive;
  double inner_alpha = 0.0;  // threshold for the per-cluster direction sketch
  double inner_beta = 0.0;   // radius for the per-cluster direction clustering
  double merge_angle = std::numbers::pi / 36.0;
  std::optional<double> gamma;     // required by GammaThreshold
  std::size_t sub_directions = 1000;
  std::uint64_t seed = 0;
};

struct HyperplaneCompression {
  OuterHull hull;                          // one halfspace per merged direction
  std::vector<std::size_t> cluster_sizes;  // members merged into each halfspace
  std::size_t candidates = 0;              // |F| before merging
  bool bounded = false;
};

/// Reduces the outer hull to far fewer halfspaces.
///
/// Recursive variant: for each representative the unit directions of F_v are
/// treated as a point cloud, sketched, thresholded and radius-clustered; the
/// surviving original directions form F. Gamma variant: a direction joins F
/// when some three distinct representatives have pairwise support-value
/// differences below gamma under it.
///
/// F is then clustered by angle (greedy first fit, visiting directions from
/// the largest F_v down), each cluster is replaced by its normalized mean, and
/// the result is re-sketched against the cloud to give fresh tight offsets.
/// Throws NumericalError if no direction survives. Unbounded output is
/// allowed and flagged.
HyperplaneCompression hyperplane_compress(const PointCloud& cloud,
                                          const CurvatureSketch& sketch,
                                          const DirectionSet& dirs,
                                          const ClusterMap& clusters,
                                          const DirectionBundle& bundle,
                                          const HyperplaneOptions& options);

/// Greedy first-fit angular clustering of unit vectors (rows of `unit`, in
/// the given visiting order). Returns the cluster index of each visited row.
std::vector<std::size_t> angular_clusters(const std::vector<std::vector<double>>& unit,
                                          double merge_angle);

struct CompressionRatios {
  double vertex = 0.0;
  std::optional<double> hyperplane;
};

/// found / truth; truth must be positive.
double compression_ratio(std::size_t found, std::size_t truth);

CompressionRatios compression_ratios(std::size_t found_vertices, std::size_t true_vertices,
                                     std::optional<std::size_t> found_planes = {},
                                     std::optional<std::size_t> true_planes = {});

}  // namespace achull
