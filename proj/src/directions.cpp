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

#include "achull/directions.hpp"

#include <cmath>
#include <string>

#include "achull/errors.hpp"
#include "achull/rng.hpp"
#include "achull/types.hpp"

namespace achull {

DirectionSet::DirectionSet(std::size_t dim, std::vector<double> coords,
                           std::uint64_t seed, DirectionMethod method)
    : dim_(dim), coords_(std::move(coords)), seed_(seed), method_(method) {
  if (dim_ == 0) throw ValidationError("direction dimension must be positive");
  if (coords_.empty() || coords_.size() % dim_ != 0) {
    throw ValidationError("direction set must hold M >= 1 rows of dim entries");
  }
  for (std::size_t j = 0; j < size(); ++j) {
    const double len = norm((*this)[j]);
    if (!std::isfinite(len) || std::abs(len - 1.0) > 1e-12) {
      throw ValidationError("direction " + std::to_string(j) + " is not a unit vector");
    }
  }
}

DirectionSet DirectionSet::from_vectors(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ValidationError("direction set must be nonempty");
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) throw ValidationError("ragged direction rows");
    const double len = norm(r);
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw ValidationError("zero or non-finite direction");
    }
    for (double v : r) coords.push_back(v / len);
  }
  return DirectionSet(dim, std::move(coords), 0, DirectionMethod::Explicit);
}

DirectionSet DirectionSet::prefix(std::size_t k) const { return slice(0, k); }

DirectionSet DirectionSet::slice(std::size_t first, std::size_t last) const {
  if (first >= last || last > size()) throw ValidationError("direction range out of bounds");
  return DirectionSet(dim_,
                      std::vector<double>(coords_.begin() + static_cast<long>(first * dim_),
                                          coords_.begin() + static_cast<long>(last * dim_)),
                      seed_, method_);
}

DirectionSet sample_uniform(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw ValidationError("sample_uniform: dimension must be at least 2");
  if (m < 1) throw ValidationError("sample_uniform: need at least one direction");
  Rng rng(seed);
  std::vector<double> coords(m * n);
  std::vector<double> g(n);
  for (std::size_t j = 0; j < m; ++j) {
    double len = 0.0;
    do {
      for (std::size_t k = 0; k < n; k += 2) {
        auto [a, b] = rng.normal_pair();
        g[k] = a;
        if (k + 1 < n) g[k + 1] = b;
      }
      len = norm(g);
    } while (!(len > 0.0));
    for (std::size_t k = 0; k < n; ++k) coords[j * n + k] = g[k] / len;
  }
  return DirectionSet(n, std::move(coords), seed, DirectionMethod::GaussianUniform);
}

DirectionSet concat(const DirectionSet& a, const DirectionSet& b) {
  if (a.dim() != b.dim()) throw ValidationError("concat: dimension mismatch");
  std::vector<double> coords(a.coords().begin(), a.coords().end());
  coords.insert(coords.end(), b.coords().begin(), b.coords().end());
  const auto method =
      a.method() == b.method() ? a.method() : DirectionMethod::Explicit;
  return DirectionSet(a.dim(), std::move(coords), a.seed(), method);
}

}  // namespace achull
