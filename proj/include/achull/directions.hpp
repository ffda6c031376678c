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
#include <span>
#include <vector>

namespace achull {

enum class DirectionMethod {
  GaussianUniform,  // normalized standard normal vectors
  Explicit,         // supplied by the caller (tests, files)
};

/// A finite set of unit vectors in R^n, row-major. Immutable.
class DirectionSet {
 public:
  /// Checks that every row has unit norm to within 1e-12 and M >= 1.
  DirectionSet(std::size_t dim, std::vector<double> coords, std::uint64_t seed,
               DirectionMethod method);

  /// Normalizes each row first; rejects zero rows.
  static DirectionSet from_vectors(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }
  std::uint64_t seed() const noexcept { return seed_; }
  DirectionMethod method() const noexcept { return method_; }

  std::span<const double> operator[](std::size_t j) const noexcept {
    return {coords_.data() + j * dim_, dim_};
  }
  std::span<const double> coords() const noexcept { return coords_; }

  /// First k directions. Because each sampled direction consumes a fixed
  /// number of generator outputs, prefix(k) of sample_uniform(m, n, s) equals
  /// sample_uniform(k, n, s).
  DirectionSet prefix(std::size_t k) const;

  /// Directions [first, last).
  DirectionSet slice(std::size_t first, std::size_t last) const;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::uint64_t seed_;
  DirectionMethod method_;
};

/// m directions uniform on S^{n-1}. Bit-reproducible for a given (m, n, seed).
DirectionSet sample_uniform(std::size_t m, std::size_t n, std::uint64_t seed);

/// a followed by b.
DirectionSet concat(const DirectionSet& a, const DirectionSet& b);

}  // namespace achull
