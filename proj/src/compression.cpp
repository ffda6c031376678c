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

#include "achull/compression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "achull/errors.hpp"
#include "achull/halfspace_lp.hpp"
#include "achull/rng.hpp"

namespace achull {

VertexCompression vertex_compress(const InnerHull& inner, const PointCloud& cloud,
                                  const CurvatureSketch& sketch, double beta,
                                  CurvatureOrder order) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ValidationError("vertex_compress: beta must be a finite value >= 0");
  }
  if (sketch.n_points != cloud.size()) {
    throw ValidationError("vertex_compress: sketch does not match the cloud");
  }
  const std::size_t k = inner.kept.size();
  std::vector<std::size_t> visit(k);
  std::iota(visit.begin(), visit.end(), std::size_t{0});
  std::stable_sort(visit.begin(), visit.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = sketch.counts[inner.kept[a]];
    const auto cb = sketch.counts[inner.kept[b]];
    return order == CurvatureOrder::Decreasing ? ca > cb : ca < cb;
  });

  VertexCompression out;
  std::vector<bool> done(k, false);
  for (std::size_t step = 0; step < k; ++step) {
    const std::size_t a = visit[step];
    if (done[a]) continue;
    done[a] = true;
    const std::size_t rep = inner.kept[a];
    std::vector<std::size_t> members{rep};
    // The representative itself is exempt: d(v, v) = 0 < beta.
    for (std::size_t later = step + 1; later < k; ++later) {
      const std::size_t b = visit[later];
      if (done[b]) continue;
      if (distance(cloud[rep], cloud[inner.kept[b]]) < beta) {
        done[b] = true;
        members.push_back(inner.kept[b]);
      }
    }
    out.clusters.representatives.push_back(rep);
    out.clusters.members.push_back(std::move(members));
  }

  std::vector<std::size_t> reps = out.clusters.representatives;
  std::sort(reps.begin(), reps.end());
  out.hull.alpha = inner.alpha;
  out.hull.mode = inner.mode;
  for (std::size_t v : reps) {
    out.hull.kept.push_back(v);
    out.hull.curvatures.push_back(relative_curvature(sketch, v));
  }
  return out;
}

DirectionBundle direction_bundle(const ClusterMap& clusters,
                                 const CurvatureSketch& sketch) {
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(sketch.n_points, kNone);
  for (std::size_t c = 0; c < clusters.members.size(); ++c) {
    for (std::size_t w : clusters.members[c]) owner[w] = c;
  }
  DirectionBundle bundle;
  bundle.directions.resize(clusters.members.size());
  for (std::size_t j = 0; j < sketch.assignment.size(); ++j) {
    const std::size_t c = owner[sketch.assignment[j]];
    if (c != kNone) bundle.directions[c].push_back(j);
  }
  return bundle;
}

std::vector<std::size_t> angular_clusters(const std::vector<std::vector<double>>& unit,
                                          double merge_angle) {
  const double cos_limit = std::cos(merge_angle);
  std::vector<std::size_t> seeds;  // row index of each cluster's first member
  std::vector<std::size_t> label(unit.size());
  for (std::size_t i = 0; i < unit.size(); ++i) {
    std::size_t c = 0;
    for (; c < seeds.size(); ++c) {
      if (dot(unit[i], unit[seeds[c]]) > cos_limit) break;
    }
    if (c == seeds.size()) seeds.push_back(i);
    label[i] = c;
  }
  return label;
}

namespace {

// Directions of F_v that survive a sketch of F_v viewed as a point cloud.
std::vector<std::size_t> reduce_bundle(const std::vector<std::size_t>& fv,
                                       const DirectionSet& dirs,
                                       const HyperplaneOptions& options,
                                       std::uint64_t stream) {
  if (fv.size() <= 1) return fv;
  const std::size_t n = dirs.dim();
  std::vector<double> coords;
  coords.reserve(fv.size() * n);
  for (std::size_t j : fv) {
    const auto d = dirs[j];
    coords.insert(coords.end(), d.begin(), d.end());
  }
  const PointCloud projected(n, std::move(coords));
  const DirectionSet probes =
      sample_uniform(options.sub_directions, n, derive_seed(options.seed, stream));
  const CurvatureSketch sub = build_sketch(projected, probes);
  const InnerHull kept = threshold_filter(sub, options.inner_alpha, FilterMode::Hard);
  const VertexCompression vc = vertex_compress(kept, projected, sub, options.inner_beta);
  std::vector<std::size_t> survivors;
  for (std::size_t local : vc.hull.kept) survivors.push_back(fv[local]);
  return survivors;
}

bool three_close_values(std::vector<double>& values, double gamma) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i + 2 < values.size(); ++i) {
    if (values[i + 2] - values[i] < gamma) return true;
  }
  return false;
}

}  // namespace

HyperplaneCompression hyperplane_compress(const PointCloud& cloud,
                                          const CurvatureSketch& sketch,
                                          const DirectionSet& dirs,
                                          const ClusterMap& clusters,
                                          const DirectionBundle& bundle,
                                          const HyperplaneOptions& options) {
  if (!(options.merge_angle > 0.0 && options.merge_angle < std::numbers::pi)) {
    throw ValidationError("hyperplane_compress: merge_angle must lie in (0, pi)");
  }
  if (bundle.directions.size() != clusters.representatives.size()) {
    throw ValidationError("hyperplane_compress: bundle does not match cluster map");
  }
  if (sketch.n_dirs != dirs.size() || sketch.n_points != cloud.size() ||
      dirs.dim() != cloud.dim()) {
    throw ValidationError("hyperplane_compress: sketch was not built from these inputs");
  }
  if (options.variant == HyperplaneVariant::Recursive) {
    if (options.sub_directions < 1) {
      throw ValidationError("hyperplane_compress: sub_directions must be positive");
    }
    if (!(options.inner_alpha >= 0.0 && options.inner_alpha <= 1.0) ||
        !(options.inner_beta >= 0.0)) {
      throw ValidationError("hyperplane_compress: inner alpha/beta out of range");
    }
  } else if (!options.gamma || !(*options.gamma > 0.0)) {
    throw ValidationError("hyperplane_compress: gamma variant needs gamma > 0");
  }

  // Largest F_v first; ties keep cluster order.
  std::vector<std::size_t> groups(clusters.representatives.size());
  std::iota(groups.begin(), groups.end(), std::size_t{0});
  std::stable_sort(groups.begin(), groups.end(), [&](std::size_t a, std::size_t b) {
    return bundle.directions[a].size() > bundle.directions[b].size();
  });

  std::vector<std::size_t> candidates;
  if (options.variant == HyperplaneVariant::Recursive) {
    for (std::size_t c : groups) {
      const auto survivors = reduce_bundle(bundle.directions[c], dirs, options, c);
      candidates.insert(candidates.end(), survivors.begin(), survivors.end());
    }
  } else {
    std::vector<bool> selected(dirs.size(), false);
    std::vector<double> values(clusters.representatives.size());
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      for (std::size_t c = 0; c < values.size(); ++c) {
        values[c] = dot(cloud[clusters.representatives[c]], dirs[j]);
      }
      selected[j] = three_close_values(values, *options.gamma);
    }
    std::vector<bool> placed(dirs.size(), false);
    for (std::size_t c : groups) {
      for (std::size_t j : bundle.directions[c]) {
        if (selected[j]) {
          candidates.push_back(j);
          placed[j] = true;
        }
      }
    }
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      if (selected[j] && !placed[j]) candidates.push_back(j);
    }
  }
  if (candidates.empty()) throw NumericalError("no constraints survived");

  std::vector<std::vector<double>> unit;
  unit.reserve(candidates.size());
  for (std::size_t j : candidates) unit.emplace_back(dirs[j].begin(), dirs[j].end());
  const std::vector<std::size_t> label = angular_clusters(unit, options.merge_angle);
  const std::size_t n_clusters =
      label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;

  const std::size_t n = dirs.dim();
  std::vector<std::vector<double>> sums(n_clusters, std::vector<double>(n, 0.0));
  std::vector<std::size_t> first(n_clusters, unit.size());
  std::vector<std::size_t> sizes(n_clusters, 0);
  for (std::size_t i = 0; i < unit.size(); ++i) {
    const std::size_t c = label[i];
    for (std::size_t k = 0; k < n; ++k) sums[c][k] += unit[i][k];
    first[c] = std::min(first[c], i);
    ++sizes[c];
  }
  for (std::size_t c = 0; c < n_clusters; ++c) {
    if (norm(sums[c]) < 1e-12) sums[c] = unit[first[c]];
  }

  const DirectionSet merged = DirectionSet::from_vectors(sums);
  const CurvatureSketch resketch = build_sketch(cloud, merged);
  HyperplaneCompression out;
  out.hull = outer_hull(resketch, cloud, merged);
  out.hull.source = HullSource::Compressed;
  out.cluster_sizes = std::move(sizes);
  out.candidates = candidates.size();
  out.bounded = is_bounded(out.hull);
  return out;
}

double compression_ratio(std::size_t found, std::size_t truth) {
  if (truth == 0) throw ValidationError("compression ratio: true count must be positive");
  return static_cast<double>(found) / static_cast<double>(truth);
}

CompressionRatios compression_ratios(std::size_t found_vertices, std::size_t true_vertices,
                                     std::optional<std::size_t> found_planes,
                                     std::optional<std::size_t> true_planes) {
  CompressionRatios r;
  r.vertex = compression_ratio(found_vertices, true_vertices);
  if (found_planes && true_planes) r.hyperplane = compression_ratio(*found_planes, *true_planes);
  return r;
}

}  // namespace achull
