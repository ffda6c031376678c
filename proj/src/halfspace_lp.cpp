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

#include "achull/halfspace_lp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "achull/errors.hpp"

namespace achull {
namespace {

// Columns 0..m-1 are the halfspace normals (row-scaled so the right-hand side
// is nonnegative), columns m..m+n-1 are phase-one artificials.
class DualSimplex {
 public:
  DualSimplex(const OuterHull& hull, std::span<const double> d)
      : hull_(hull), n_(hull.dim), m_(hull.halfspaces.size()), sign_(n_), rhs_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      sign_[i] = d[i] < 0.0 ? -1.0 : 1.0;
      rhs_(static_cast<Eigen::Index>(i)) = std::abs(d[i]);
    }
    double scale = 0.0;
    for (const auto& h : hull_.halfspaces) scale = std::max(scale, std::abs(h.offset));
    cost_scale_ = std::max(1.0, scale);
  }

  std::optional<HalfspaceSupport> solve() {
    basis_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) basis_[i] = m_ + i;

    if (!iterate(/*phase_one=*/true)) {
      throw NumericalError("halfspace LP: phase one failed to terminate");
    }
    double infeasibility = 0.0;
    for (std::size_t r = 0; r < n_; ++r) {
      if (basis_[r] >= m_) infeasibility += x_basis_(static_cast<Eigen::Index>(r));
    }
    if (infeasibility > 1e-9) return std::nullopt;
    drive_out_artificials();
    if (!iterate(/*phase_one=*/false)) {
      throw NumericalError("halfspace LP: phase two failed to terminate");
    }

    // Simplex multipliers of the dual are the primal maximizer.
    factor();
    const Eigen::VectorXd pi = lu_.transpose().solve(basis_costs(false));
    HalfspaceSupport out;
    out.argmax.resize(n_);
    double value = 0.0;
    for (std::size_t r = 0; r < n_; ++r) {
      if (basis_[r] < m_) {
        value += hull_.halfspaces[basis_[r]].offset * x_basis_(static_cast<Eigen::Index>(r));
      }
    }
    for (std::size_t i = 0; i < n_; ++i) {
      out.argmax[i] = sign_[i] * pi(static_cast<Eigen::Index>(i));
    }
    out.value = value;
    return out;
  }

 private:
  double entry(std::size_t col, std::size_t row) const {
    if (col >= m_) return col - m_ == row ? 1.0 : 0.0;
    return sign_[row] * hull_.halfspaces[col].normal[row];
  }

  Eigen::VectorXd column(std::size_t col) const {
    Eigen::VectorXd c(n_);
    for (std::size_t r = 0; r < n_; ++r) c(static_cast<Eigen::Index>(r)) = entry(col, r);
    return c;
  }

  double cost(std::size_t col, bool phase_one) const {
    if (phase_one) return col >= m_ ? 1.0 : 0.0;
    return col >= m_ ? 0.0 : hull_.halfspaces[col].offset;
  }

  Eigen::VectorXd basis_costs(bool phase_one) const {
    Eigen::VectorXd c(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      c(static_cast<Eigen::Index>(r)) = cost(basis_[r], phase_one);
    }
    return c;
  }

  void factor() {
    Eigen::MatrixXd b(n_, n_);
    for (std::size_t r = 0; r < n_; ++r) b.col(static_cast<Eigen::Index>(r)) = column(basis_[r]);
    lu_.compute(b);
    x_basis_ = lu_.solve(rhs_);
    for (Eigen::Index r = 0; r < x_basis_.size(); ++r) {
      if (x_basis_(r) < 0.0 && x_basis_(r) > -1e-12) x_basis_(r) = 0.0;
    }
  }

  bool in_basis(std::size_t col) const {
    return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
  }

  // Returns false if the iteration cap is hit.
  bool iterate(bool phase_one) {
    const double tol = phase_one ? 1e-12 : 1e-12 * cost_scale_;
    const std::size_t columns = phase_one ? m_ + n_ : m_;
    const std::size_t cap = 50 * (m_ + n_) + 100;
    std::size_t degenerate_streak = 0;
    for (std::size_t it = 0; it < cap; ++it) {
      factor();
      const Eigen::VectorXd pi = lu_.transpose().solve(basis_costs(phase_one));
      const bool bland = degenerate_streak > 2 * n_;

      std::size_t enter = columns;
      double best = -tol;
      for (std::size_t j = 0; j < columns; ++j) {
        if (in_basis(j)) continue;
        double reduced = cost(j, phase_one);
        for (std::size_t r = 0; r < n_; ++r) reduced -= pi(static_cast<Eigen::Index>(r)) * entry(j, r);
        if (reduced < best) {
          enter = j;
          if (bland) break;
          best = reduced;
        }
      }
      if (enter == columns) return true;

      const Eigen::VectorXd w = lu_.solve(column(enter));
      std::size_t leave = n_;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < n_; ++r) {
        const double wr = w(static_cast<Eigen::Index>(r));
        if (wr <= 1e-12) continue;
        const double t = x_basis_(static_cast<Eigen::Index>(r)) / wr;
        if (t < ratio || (leave < n_ && t == ratio && basis_[r] < basis_[leave])) {
          ratio = t;
          leave = r;
        }
      }
      if (leave == n_) {
        // Dual unbounded would make the primal infeasible, which cannot
        // happen for a hull that contains its cloud.
        throw NumericalError("halfspace LP: constraints are infeasible");
      }
      degenerate_streak = ratio <= 0.0 ? degenerate_streak + 1 : 0;
      basis_[leave] = enter;
    }
    return false;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < n_; ++r) {
      if (basis_[r] < m_) continue;
      factor();
      for (std::size_t j = 0; j < m_; ++j) {
        if (in_basis(j)) continue;
        const Eigen::VectorXd w = lu_.solve(column(j));
        if (std::abs(w(static_cast<Eigen::Index>(r))) > 1e-9) {
          basis_[r] = j;
          break;
        }
      }
    }
  }

  const OuterHull& hull_;
  std::size_t n_;
  std::size_t m_;
  std::vector<double> sign_;
  Eigen::VectorXd rhs_;
  double cost_scale_ = 1.0;
  std::vector<std::size_t> basis_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::VectorXd x_basis_;
};

}  // namespace

std::optional<HalfspaceSupport> halfspace_support(const OuterHull& hull,
                                                  std::span<const double> d) {
  if (d.size() != hull.dim) throw ValidationError("halfspace_support: dimension mismatch");
  if (hull.halfspaces.empty()) return std::nullopt;
  return DualSimplex(hull, d).solve();
}

bool is_bounded(const OuterHull& hull) {
  std::vector<double> e(hull.dim, 0.0);
  for (std::size_t k = 0; k < hull.dim; ++k) {
    for (double s : {1.0, -1.0}) {
      std::fill(e.begin(), e.end(), 0.0);
      e[k] = s;
      if (!halfspace_support(hull, e)) return false;
    }
  }
  return true;
}

}  // namespace achull
