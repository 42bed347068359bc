// Copyright 2026 The mipt-dqite Authors
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

#include <span>

#include <Eigen/Core>

namespace mipt {

/// Penalized cubic B-spline (P-spline) on uniform knots over [lo, hi] with a
/// second-difference penalty on the coefficients.
class SmoothingSpline {
 public:
  static constexpr int kDefaultSegments = 8;
  static constexpr double kDefaultSmoothing = 1e-2;

  /// Least-squares fit; throws InvalidArgument for fewer than 4 points or a
  /// degenerate abscissa range.
  static SmoothingSpline fit(std::span<const double> x, std::span<const double> y,
                             int segments = kDefaultSegments, double smoothing = kDefaultSmoothing);

  double operator()(double x) const;
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const Eigen::VectorXd& coefficients() const { return coef_; }

 private:
  double lo_ = 0.0;
  double hi_ = 1.0;
  int segments_ = 1;
  Eigen::VectorXd coef_;
};

}  // namespace mipt
