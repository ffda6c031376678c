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

#include <optional>
#include <span>
#include <vector>

#include "achull/types.hpp"

namespace achull {

struct HalfspaceSupport {
  double value = 0.0;          // max d . x over the halfspace intersection
  std::vector<double> argmax;  // a maximizing vertex
};

/// Support function of an outer hull: max d . x subject to every halfspace.
///
/// Solved as the dual problem min b . y s.t. A^T y = d, y >= 0 with a dense
/// two-phase revised simplex. The intersection always contains the cloud it
/// was built from, so an infeasible dual means the primal is unbounded along
/// d; that case returns nullopt.
std::optional<HalfspaceSupport> halfspace_support(const OuterHull& hull,
                                                  std::span<const double> d);

/// True when the recession cone is {0}, i.e. the support along every +-e_k
/// is finite (a convex cone holding all +-e_k is the whole space).
bool is_bounded(const OuterHull& hull);

}  // namespace achull
