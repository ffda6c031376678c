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

// Wolfe's min-norm-point algorithm, run on the shifted points q_i = v_i - x so
// that the quantity minimized is |y| for y in CH(q).
//
// Each major cycle calls a linear minimization oracle j = argmin_i y . q_i,
// adds q_j to the corral and then runs minor cycles that move y toward the
// affine minimizer of the corral while staying inside its convex hull.
//
// For large vertex sets the oracle first searches a small pool seeded with
// the nearest vertices; the full set is only scanned when the pool can no
// longer make progress. Termination is always certified against the full set.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "achull/errors.hpp"
#include "achull/geometry.hpp"

namespace achull {
namespace {

constexpr std::size_t kPoolThreshold = 256;

class WolfeSolver {
 public:
  WolfeSolver(std::span<const double> x, const PointCloud& cloud,
              std::span<const std::size_t> indices, double tol)
      : x_(x), cloud_(cloud), indices_(indices), tol_(tol), n_(cloud.dim()) {}

  MinNormResult run() {
    const std::size_t count = indices_.size();
    const std::size_t cap = std::max<std::size_t>(10 * count * n_, 100);

    std::size_t nearest = 0;
    double nearest_d2 = std::numeric_limits<double>::infinity();
    std::vector<double> d2(count);
    for (std::size_t a = 0; a < count; ++a) {
      d2[a] = sq_dist_to_x(a);
      if (d2[a] < nearest_d2) {
        nearest_d2 = d2[a];
        nearest = a;
      }
    }

    if (count > kPoolThreshold) {
      const std::size_t k = std::min(count, 4 * (n_ + 1) + 16);
      pool_.resize(count);
      std::iota(pool_.begin(), pool_.end(), std::size_t{0});
      std::nth_element(pool_.begin(), pool_.begin() + static_cast<long>(k - 1),
                       pool_.end(), [&](std::size_t a, std::size_t b) {
                         return d2[a] < d2[b] || (d2[a] == d2[b] && a < b);
                       });
      pool_.resize(k);
      in_pool_.assign(count, false);
      for (std::size_t a : pool_) in_pool_[a] = true;
    }

    corral_ = {nearest};
    lambda_ = {1.0};
    recompute_y();

    MinNormResult out;
    double lower = 0.0;
    std::size_t iter = 0;
    while (true) {
      ++iter;
      const double ny2 = dot(y_, y_);
      const double ny = std::sqrt(ny2);
      if (ny == 0.0) break;

      auto [j, m] = oracle(ny);
      lower = std::max(0.0, m) / ny;
      if (ny - lower <= tol_) break;
      if (iter > cap) {
        throw ConvergenceError("min-norm-point iteration cap reached",
                               closest_point(), ny - lower);
      }
      if (std::find(corral_.begin(), corral_.end(), j) != corral_.end() ||
          m >= ny2) {
        // No strict descent left at working precision.
        stall(ny - lower);
        break;
      }

      corral_.push_back(j);
      lambda_.push_back(0.0);
      minor_cycles();
      if (dot(y_, y_) >= ny2) {
        stall(ny - lower);
        break;
      }
    }

    out.closest = closest_point();
    out.distance = std::sqrt(dot(y_, y_));
    out.lower_bound = std::min(lower, out.distance);
    for (std::size_t s = 0; s < corral_.size(); ++s) {
      out.support.push_back(indices_[corral_[s]]);
      out.weights.push_back(lambda_[s]);
    }
    out.iterations = iter;
    return out;
  }

 private:
  const double* vertex(std::size_t a) const { return cloud_.row_ptr(indices_[a]); }

  double sq_dist_to_x(std::size_t a) const {
    const double* v = vertex(a);
    double s = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      const double t = v[k] - x_[k];
      s += t * t;
    }
    return s;
  }

  // y . q_a
  double slope(std::size_t a) const {
    const double* v = vertex(a);
    double s = 0.0;
    for (std::size_t k = 0; k < n_; ++k) s += y_[k] * (v[k] - x_[k]);
    return s;
  }

  std::pair<std::size_t, double> scan(std::span<const std::size_t> set) const {
    std::size_t best = set.front();
    double best_val = slope(best);
    for (std::size_t a : set.subspan(1)) {
      const double v = slope(a);
      if (v < best_val || (v == best_val && a < best)) {
        best_val = v;
        best = a;
      }
    }
    return {best, best_val};
  }

  std::pair<std::size_t, double> scan_all() const {
    std::size_t best = 0;
    double best_val = slope(0);
    for (std::size_t a = 1; a < indices_.size(); ++a) {
      const double v = slope(a);
      if (v < best_val) {
        best_val = v;
        best = a;
      }
    }
    return {best, best_val};
  }

  std::pair<std::size_t, double> oracle(double ny) {
    if (pool_.empty()) return scan_all();
    auto local = scan(pool_);
    const double local_gap = ny - std::max(0.0, local.second) / ny;
    const bool corral_member =
        std::find(corral_.begin(), corral_.end(), local.first) != corral_.end();
    if (local_gap > tol_ && !corral_member && local.second < ny * ny) {
      return local;
    }
    auto global = scan_all();
    if (!in_pool_[global.first]) {
      in_pool_[global.first] = true;
      pool_.push_back(global.first);
    }
    return global;
  }

  void recompute_y() {
    y_.assign(n_, 0.0);
    for (std::size_t s = 0; s < corral_.size(); ++s) {
      const double* v = vertex(corral_[s]);
      for (std::size_t k = 0; k < n_; ++k) y_[k] += lambda_[s] * (v[k] - x_[k]);
    }
  }

  // Weights of the point of minimum norm in the affine hull of the corral.
  std::vector<double> affine_minimizer() const {
    const std::size_t k = corral_.size();
    if (k == 1) return {1.0};
    Eigen::MatrixXd e(n_, k - 1);
    Eigen::VectorXd rhs(n_);
    const double* base = vertex(corral_[0]);
    for (std::size_t r = 0; r < n_; ++r) rhs(r) = -(base[r] - x_[r]);
    for (std::size_t c = 1; c < k; ++c) {
      const double* v = vertex(corral_[c]);
      for (std::size_t r = 0; r < n_; ++r) e(r, c - 1) = v[r] - base[r];
    }
    const Eigen::VectorXd a = e.colPivHouseholderQr().solve(rhs);
    std::vector<double> mu(k);
    mu[0] = 1.0 - a.sum();
    for (std::size_t c = 1; c < k; ++c) mu[c] = a(c - 1);
    return mu;
  }

  void minor_cycles() {
    while (true) {
      const std::vector<double> mu = affine_minimizer();
      if (std::all_of(mu.begin(), mu.end(), [](double m) { return m > 0.0; })) {
        lambda_ = mu;
        recompute_y();
        return;
      }
      double theta = 1.0;
      std::size_t drop = 0;
      for (std::size_t s = 0; s < mu.size(); ++s) {
        if (mu[s] <= 0.0) {
          const double t = lambda_[s] / (lambda_[s] - mu[s]);
          if (t < theta) {
            theta = t;
            drop = s;
          }
        }
      }
      for (std::size_t s = 0; s < mu.size(); ++s) {
        lambda_[s] = theta * mu[s] + (1.0 - theta) * lambda_[s];
      }
      lambda_[drop] = 0.0;
      std::size_t w = 0;
      for (std::size_t s = 0; s < corral_.size(); ++s) {
        if (lambda_[s] > 0.0) {
          corral_[w] = corral_[s];
          lambda_[w] = lambda_[s];
          ++w;
        }
      }
      corral_.resize(w);
      lambda_.resize(w);
      const double total = std::accumulate(lambda_.begin(), lambda_.end(), 0.0);
      for (double& l : lambda_) l /= total;
      recompute_y();
      if (corral_.size() == 1) return;
    }
  }

  void stall(double gap) const {
    if (gap > tol_) {
      throw ConvergenceError("min-norm-point stalled before certifying tolerance",
                             closest_point(), gap);
    }
  }

  std::vector<double> closest_point() const {
    std::vector<double> p(n_);
    for (std::size_t k = 0; k < n_; ++k) p[k] = x_[k] + y_[k];
    return p;
  }

  std::span<const double> x_;
  const PointCloud& cloud_;
  std::span<const std::size_t> indices_;
  double tol_;
  std::size_t n_;

  std::vector<std::size_t> corral_;  // positions into indices_
  std::vector<double> lambda_;
  std::vector<double> y_;
  std::vector<std::size_t> pool_;
  std::vector<bool> in_pool_;
};

void check_query(std::span<const double> x, std::size_t dim, double tol) {
  if (!(tol > 0.0)) throw ValidationError("min_norm_point: tol must be positive");
  if (x.size() != dim) throw ValidationError("min_norm_point: dimension mismatch");
  for (double v : x) {
    if (!std::isfinite(v)) throw ValidationError("min_norm_point: non-finite query");
  }
}

}  // namespace

MinNormResult min_norm_point(std::span<const double> x, const PointCloud& cloud,
                             std::span<const std::size_t> indices, double tol) {
  check_query(x, cloud.dim(), tol);
  if (indices.empty()) throw ValidationError("min_norm_point: empty vertex set");
  for (std::size_t i : indices) {
    if (i >= cloud.size()) throw ValidationError("min_norm_point: index out of range");
  }
  return WolfeSolver(x, cloud, indices, tol).run();
}

MinNormResult min_norm_point(std::span<const double> x, const VertexPolytope& hull,
                             double tol) {
  std::vector<std::size_t> all(hull.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return min_norm_point(x, hull.vertices(), all, tol);
}

}  // namespace achull
