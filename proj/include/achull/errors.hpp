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

#include <stdexcept>
#include <string>
#include <vector>

namespace achull {

/// Bad input: wrong dimensions, out-of-range parameters, malformed files.
/// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not produce a certified answer.
/// The CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the min-norm-point solver when the iteration cap is hit. Carries
/// the best hull point found and the remaining certificate gap.
class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best_point,
                   double gap)
      : NumericalError(what), best_point_(std::move(best_point)), gap_(gap) {}

  const std::vector<double>& best_point() const noexcept { return best_point_; }
  double gap() const noexcept { return gap_; }

 private:
  std::vector<double> best_point_;
  double gap_;
};

/// The halfspace intersection is not bounded along a queried direction.
class UnboundedError : public NumericalError {
 public:
  UnboundedError() : NumericalError("outer hull unbounded") {}
};

}  // namespace achull
