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

#include <algorithm>
#include <cmath>
#include <string>

#include "achull/errors.hpp"
#include "achull/types.hpp"

namespace achull {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw ValidationError("point cloud dimension must be positive");
  if (coords_.empty()) throw ValidationError("point cloud must be nonempty");
  if (coords_.size() % dim_ != 0) {
    throw ValidationError("coordinate count " + std::to_string(coords_.size()) +
                          " is not a multiple of dimension " +
                          std::to_string(dim_));
  }
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!std::isfinite(coords_[k])) {
      throw ValidationError("non-finite coordinate in point " +
                            std::to_string(k / dim_));
    }
  }
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ValidationError("point cloud must be nonempty");
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw ValidationError("row " + std::to_string(i) + " has " +
                            std::to_string(rows[i].size()) +
                            " coordinates, expected " + std::to_string(dim));
    }
    coords.insert(coords.end(), rows[i].begin(), rows[i].end());
  }
  return PointCloud(dim, std::move(coords));
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
  std::vector<double> out;
  out.reserve(indices.size() * dim_);
  for (std::size_t i : indices) {
    if (i >= size()) throw ValidationError("point index out of range");
    const auto row = (*this)[i];
    out.insert(out.end(), row.begin(), row.end());
  }
  return PointCloud(dim_, std::move(out));
}

double PointCloud::radius() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i) best = std::max(best, norm((*this)[i]));
  return best;
}

VertexPolytope VertexPolytope::from_indices(const PointCloud& cloud,
                                            std::span<const std::size_t> indices) {
  return VertexPolytope(cloud.subset(indices));
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double norm(std::span<const double> a) noexcept { return std::sqrt(dot(a, a)); }

double distance(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return std::sqrt(s);
}

}  // namespace achull
