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
#include <optional>
#include <string>
#include <vector>

#include "achull/types.hpp"

namespace achull {

enum class ShapeKind {
  Simplex,  // uniform in {x >= 0, sum x <= 1}
  Cube,     // uniform in [0, 1]^n
  Ball,     // uniform in the unit ball
  Sphere,   // uniform on the unit sphere
  ConeCap,  // "ice cream cone": solid half ball below, cone to an apex above
};

ShapeKind parse_shape(const std::string& name);
const char* to_string(ShapeKind kind) noexcept;

/// x -> matrix * x + shift, matrix row-major n x n.
struct AffineTransform {
  std::vector<double> matrix;
  std::vector<double> shift;
};

struct ShapeSpec {
  ShapeKind kind = ShapeKind::Cube;
  std::size_t dim = 3;
  std::size_t count = 1000;
  std::optional<AffineTransform> transform;
  std::uint64_t seed = 0;
};

/// Height of the cone-cap apex above the centre of the half ball.
inline constexpr double kConeApexHeight = 2.0;

/// Draws spec.count points. Deterministic per spec.
///
/// For ConeCap, point 0 is the apex itself (the isolated sharp vertex) and
/// the rest are uniform in the solid by rejection sampling.
PointCloud generate(const ShapeSpec& spec);

/// A fixed, well-conditioned shear-and-scale map used by the benchmarks.
AffineTransform benchmark_transform(std::size_t dim);

}  // namespace achull
