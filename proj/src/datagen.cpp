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

#include "achull/datagen.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "achull/errors.hpp"
#include "achull/rng.hpp"

namespace achull {
namespace {

void gaussian(Rng& rng, std::vector<double>& g) {
  for (std::size_t k = 0; k < g.size(); k += 2) {
    auto [a, b] = rng.normal_pair();
    g[k] = a;
    if (k + 1 < g.size()) g[k + 1] = b;
  }
}

void unit_vector(Rng& rng, std::vector<double>& g) {
  double len = 0.0;
  do {
    gaussian(rng, g);
    len = norm(g);
  } while (!(len > 0.0));
  for (double& v : g) v /= len;
}

bool in_cone_cap(const std::vector<double>& x) {
  const std::size_t n = x.size();
  const double h = x[n - 1];
  double lateral2 = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) lateral2 += x[k] * x[k];
  if (h <= 0.0) return lateral2 + h * h <= 1.0;
  const double radius = 1.0 - h / kConeApexHeight;
  return radius >= 0.0 && lateral2 <= radius * radius;
}

void apply(const AffineTransform& t, std::vector<double>& coords, std::size_t n) {
  std::vector<double> tmp(n);
  for (std::size_t i = 0; i < coords.size(); i += n) {
    for (std::size_t r = 0; r < n; ++r) {
      double s = t.shift[r];
      for (std::size_t c = 0; c < n; ++c) s += t.matrix[r * n + c] * coords[i + c];
      tmp[r] = s;
    }
    std::copy(tmp.begin(), tmp.end(), coords.begin() + static_cast<long>(i));
  }
}

void check_transform(const AffineTransform& t, std::size_t n) {
  if (t.matrix.size() != n * n || t.shift.size() != n) {
    throw ValidationError("transform must be an n x n matrix plus an n-vector");
  }
  Eigen::MatrixXd m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = t.matrix[r * n + c];
    }
  }
  if (Eigen::FullPivLU<Eigen::MatrixXd>(m).rank() < static_cast<Eigen::Index>(n)) {
    throw ValidationError("transform matrix is singular");
  }
}

}  // namespace

ShapeKind parse_shape(const std::string& name) {
  if (name == "simplex") return ShapeKind::Simplex;
  if (name == "cube") return ShapeKind::Cube;
  if (name == "ball") return ShapeKind::Ball;
  if (name == "sphere") return ShapeKind::Sphere;
  if (name == "cone-cap") return ShapeKind::ConeCap;
  throw ValidationError("unknown shape '" + name + "'");
}

const char* to_string(ShapeKind kind) noexcept {
  switch (kind) {
    case ShapeKind::Simplex: return "simplex";
    case ShapeKind::Cube: return "cube";
    case ShapeKind::Ball: return "ball";
    case ShapeKind::Sphere: return "sphere";
    case ShapeKind::ConeCap: return "cone-cap";
  }
  return "unknown";
}

PointCloud generate(const ShapeSpec& spec) {
  const std::size_t n = spec.dim;
  if (n < 1) throw ValidationError("generate: dimension must be positive");
  if (spec.count < 1) throw ValidationError("generate: count must be positive");
  if ((spec.kind == ShapeKind::Sphere || spec.kind == ShapeKind::ConeCap) && n < 2) {
    throw ValidationError("generate: sphere and cone-cap need dimension >= 2");
  }
  if (spec.transform) check_transform(*spec.transform, n);

  Rng rng(spec.seed);
  std::vector<double> coords;
  coords.reserve(spec.count * n);
  std::vector<double> x(n);
  std::vector<double> e(n + 1);

  for (std::size_t i = 0; i < spec.count; ++i) {
    switch (spec.kind) {
      case ShapeKind::Simplex: {
        double total = 0.0;
        for (double& v : e) total += (v = rng.exponential());
        for (std::size_t k = 0; k < n; ++k) x[k] = e[k] / total;
        break;
      }
      case ShapeKind::Cube:
        for (double& v : x) v = rng.uniform();
        break;
      case ShapeKind::Ball: {
        unit_vector(rng, x);
        const double radius = std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
        for (double& v : x) v *= radius;
        break;
      }
      case ShapeKind::Sphere:
        unit_vector(rng, x);
        break;
      case ShapeKind::ConeCap:
        if (i == 0) {
          std::fill(x.begin(), x.end(), 0.0);
          x[n - 1] = kConeApexHeight;
          break;
        }
        do {
          for (std::size_t k = 0; k + 1 < n; ++k) x[k] = 2.0 * rng.uniform() - 1.0;
          x[n - 1] = -1.0 + (1.0 + kConeApexHeight) * rng.uniform();
        } while (!in_cone_cap(x));
        break;
    }
    coords.insert(coords.end(), x.begin(), x.end());
  }
  if (spec.transform) apply(*spec.transform, coords, n);
  return PointCloud(n, std::move(coords));
}

AffineTransform benchmark_transform(std::size_t dim) {
  AffineTransform t;
  t.matrix.assign(dim * dim, 0.0);
  t.shift.assign(dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r) {
    t.matrix[r * dim + r] = 1.0 + 0.5 * static_cast<double>(r);
    if (r + 1 < dim) t.matrix[r * dim + r + 1] = 0.6;
    t.shift[r] = 0.25 * static_cast<double>(r);
  }
  return t;
}

}  // namespace achull
