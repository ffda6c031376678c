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

#include "achull/error_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <thread>

#include "achull/errors.hpp"
#include "achull/halfspace_lp.hpp"

namespace achull {

const char* to_string(OuterErrorMethod method) noexcept {
  switch (method) {
    case OuterErrorMethod::Exact2d:
      return "exact-2d";
    case OuterErrorMethod::SupportGapEstimate:
      return "support-gap-estimate";
  }
  return "unknown";
}

double inner_error(const VertexPolytope& true_extremes, const VertexPolytope& inner,
                   double tol) {
  return directed_hausdorff(true_extremes, inner, tol);
}

double inner_error(const PointCloud& cloud, std::span<const std::size_t> true_extremes,
                   std::span<const std::size_t> inner, double tol) {
  if (inner.empty()) throw ValidationError("inner_error: inner hull is empty");
  std::vector<bool> in_inner(cloud.size(), false);
  for (std::size_t i : inner) in_inner.at(i) = true;
  double worst = 0.0;
  for (std::size_t v : true_extremes) {
    if (in_inner.at(v)) continue;
    worst = std::max(worst, min_norm_point(cloud[v], cloud, inner, tol).distance);
  }
  return worst;
}

std::size_t count_outside(const VertexPolytope& true_extremes, const VertexPolytope& inner,
                          double tol) {
  std::size_t outside = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (min_norm_point(inner.vertices()[i], true_extremes, tol).distance > tol) ++outside;
  }
  return outside;
}

namespace {

struct Line {
  double nx, ny, c, angle;
};

std::array<double, 2> intersect(const Line& a, const Line& b) {
  const double det = a.nx * b.ny - a.ny * b.nx;
  return {(a.c * b.ny - a.ny * b.c) / det, (a.nx * b.c - a.c * b.nx) / det};
}

bool violates(const Line& h, const std::array<double, 2>& p, double eps) {
  return h.nx * p[0] + h.ny * p[1] > h.c + eps;
}

}  // namespace

std::vector<std::array<double, 2>> outer_polygon_2d(const OuterHull& outer) {
  if (outer.dim != 2) throw ValidationError("outer_polygon_2d: hull is not 2-D");
  if (outer.halfspaces.empty()) throw UnboundedError();

  std::vector<Line> lines;
  double scale = 1.0;
  for (const auto& h : outer.halfspaces) {
    lines.push_back({h.normal[0], h.normal[1], h.offset, std::atan2(h.normal[1], h.normal[0])});
    scale = std::max(scale, std::abs(h.offset));
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return a.angle < b.angle || (a.angle == b.angle && a.c < b.c);
  });
  // Parallel duplicates: only the tightest matters.
  std::vector<Line> unique;
  for (const Line& l : lines) {
    if (!unique.empty() && l.angle == unique.back().angle) continue;
    unique.push_back(l);
  }

  // Bounded iff no angular gap between consecutive normals reaches pi.
  for (std::size_t i = 0; i < unique.size(); ++i) {
    const double next = i + 1 < unique.size()
                            ? unique[i + 1].angle
                            : unique.front().angle + 2.0 * std::numbers::pi;
    if (next - unique[i].angle >= std::numbers::pi) throw UnboundedError();
  }
  if (unique.size() < 3) throw UnboundedError();

  const double eps = 1e-12 * scale;
  std::deque<Line> dq;
  for (const Line& h : unique) {
    while (dq.size() >= 2 && violates(h, intersect(dq[dq.size() - 2], dq.back()), eps)) {
      dq.pop_back();
    }
    while (dq.size() >= 2 && violates(h, intersect(dq[0], dq[1]), eps)) dq.pop_front();
    dq.push_back(h);
  }
  while (dq.size() >= 3 && violates(dq.front(), intersect(dq[dq.size() - 2], dq.back()), eps)) {
    dq.pop_back();
  }
  while (dq.size() >= 3 && violates(dq.back(), intersect(dq[0], dq[1]), eps)) {
    dq.pop_front();
  }

  // Lines through a common support point leave repeated vertices; drop them.
  std::vector<std::array<double, 2>> vertices;
  auto same = [&](const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::abs(a[0] - b[0]) <= eps && std::abs(a[1] - b[1]) <= eps;
  };
  for (std::size_t i = 0; i < dq.size(); ++i) {
    const auto v = intersect(dq[i], dq[(i + 1) % dq.size()]);
    if (vertices.empty() || !same(vertices.back(), v)) vertices.push_back(v);
  }
  while (vertices.size() > 1 && same(vertices.front(), vertices.back())) vertices.pop_back();
  return vertices;
}

double outer_error_exact_2d(const OuterHull& outer, const VertexPolytope& true_extremes,
                            double tol) {
  double worst = 0.0;
  for (const auto& v : outer_polygon_2d(outer)) {
    worst = std::max(worst, min_norm_point(v, true_extremes, tol).distance);
  }
  return worst;
}

double outer_error_support_gap(const OuterHull& outer, const VertexPolytope& true_extremes,
                               const DirectionSet& probes) {
  if (probes.dim() != outer.dim || true_extremes.dim() != outer.dim) {
    throw ValidationError("outer_error: dimension mismatch");
  }
  const std::size_t m = probes.size();
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), m));
  std::vector<double> gap(m, 0.0);
  std::vector<char> unbounded(m, 0);
  auto run = [&](unsigned w) {
    for (std::size_t j = w; j < m; j += workers) {
      const auto h = halfspace_support(outer, probes[j]);
      if (!h) {
        unbounded[j] = 1;
        continue;
      }
      gap[j] = h->value - support_value(true_extremes, probes[j]);
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  if (std::any_of(unbounded.begin(), unbounded.end(), [](char u) { return u != 0; })) {
    throw UnboundedError();
  }
  return std::max(0.0, *std::max_element(gap.begin(), gap.end()));
}

OuterErrorResult outer_error(const OuterHull& outer, const VertexPolytope& true_extremes,
                             const DirectionSet& probes, double tol) {
  if (true_extremes.dim() != outer.dim) throw ValidationError("outer_error: dimension mismatch");
  if (outer.dim == 2) {
    return {outer_error_exact_2d(outer, true_extremes, tol), OuterErrorMethod::Exact2d, 0};
  }
  return {outer_error_support_gap(outer, true_extremes, probes),
          OuterErrorMethod::SupportGapEstimate, probes.size()};
}

}  // namespace achull
