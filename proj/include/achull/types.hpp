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
#include <optional>
#include <span>
#include <vector>

namespace achull {

/// A finite point set in R^n stored row-major. Point i keeps index i for the
/// lifetime of the cloud. Immutable after construction.
class PointCloud {
 public:
  /// Takes ownership of `coords` (size must be a positive multiple of `dim`,
  /// every value finite). Throws ValidationError otherwise.
  PointCloud(std::size_t dim, std::vector<double> coords);

  static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }

  std::span<const double> operator[](std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  const double* row_ptr(std::size_t i) const noexcept {
    return coords_.data() + i * dim_;
  }
  std::span<const double> coords() const noexcept { return coords_; }

  /// Copy of the selected rows, in the given order.
  PointCloud subset(std::span<const std::size_t> indices) const;

  /// Largest Euclidean norm of any point.
  double radius() const noexcept;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

/// CH(vertices). The vertex list is a claim, not necessarily minimal.
class VertexPolytope {
 public:
  explicit VertexPolytope(PointCloud vertices) : vertices_(std::move(vertices)) {}

  static VertexPolytope from_indices(const PointCloud& cloud,
                                     std::span<const std::size_t> indices);

  const PointCloud& vertices() const noexcept { return vertices_; }
  std::size_t dim() const noexcept { return vertices_.dim(); }
  std::size_t size() const noexcept { return vertices_.size(); }

 private:
  PointCloud vertices_;
};

/// {x : normal . x <= offset} with a unit normal.
struct Halfspace {
  std::vector<double> normal;
  double offset = 0.0;
  std::optional<std::size_t> support_index;
};

enum class HullSource { RawSketch, Compressed };

/// Intersection of halfspaces. Contains every point of the cloud it was built
/// from; may be unbounded when there are too few directions.
struct OuterHull {
  std::size_t dim = 0;
  std::vector<Halfspace> halfspaces;
  HullSource source = HullSource::RawSketch;
};

double dot(std::span<const double> a, std::span<const double> b) noexcept;
double norm(std::span<const double> a) noexcept;
double distance(std::span<const double> a, std::span<const double> b) noexcept;

}  // namespace achull
