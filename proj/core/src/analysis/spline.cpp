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

#include "mipt/analysis/spline.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "mipt/error.hpp"

namespace mipt {
namespace {

// Segment index and the four nonzero uniform cubic B-spline values there.
int basis(double x, double lo, double hi, int segments, std::array<double, 4>& w) {
  const double t = (x - lo) / (hi - lo) * segments;
  const int i = std::clamp(static_cast<int>(std::floor(t)), 0, segments - 1);
  const double u = t - i;
  const double v = 1.0 - u;
  w[0] = v * v * v / 6.0;
  w[1] = (3.0 * u * u * u - 6.0 * u * u + 4.0) / 6.0;
  w[2] = (-3.0 * u * u * u + 3.0 * u * u + 3.0 * u + 1.0) / 6.0;
  w[3] = u * u * u / 6.0;
  return i;
}

}  // namespace

SmoothingSpline SmoothingSpline::fit(std::span<const double> x, std::span<const double> y, int segments,
                                     double smoothing) {
  if (x.size() != y.size()) throw InvalidArgument("spline inputs differ in length");
  if (x.size() < 4) throw InvalidArgument("spline fit needs at least 4 points");
  if (segments < 1) throw InvalidArgument("spline needs at least one segment");
  if (!(smoothing >= 0.0)) throw InvalidArgument("smoothing must be >= 0");
  const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
  if (!(*mx > *mn) || !std::isfinite(*mn) || !std::isfinite(*mx)) {
    throw InvalidArgument("spline abscissae must span a finite nonzero range");
  }
  SmoothingSpline s;
  s.lo_ = *mn;
  s.hi_ = *mx;
  s.segments_ = segments;
  const int nb = segments + 3;
  Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(nb, nb);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nb);
  std::array<double, 4> w{};
  for (std::size_t k = 0; k < x.size(); ++k) {
    const int i = basis(x[k], s.lo_, s.hi_, segments, w);
    for (int a = 0; a < 4; ++a) {
      rhs[i + a] += w[static_cast<std::size_t>(a)] * y[k];
      for (int b = 0; b < 4; ++b) normal(i + a, i + b) += w[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)];
    }
  }
  Eigen::MatrixXd diff = Eigen::MatrixXd::Zero(nb - 2, nb);
  for (int j = 0; j + 2 < nb; ++j) {
    diff(j, j) = 1.0;
    diff(j, j + 1) = -2.0;
    diff(j, j + 2) = 1.0;
  }
  normal += smoothing * diff.transpose() * diff;
  s.coef_ = normal.completeOrthogonalDecomposition().solve(rhs);
  return s;
}

double SmoothingSpline::operator()(double x) const {
  std::array<double, 4> w{};
  const int i = basis(x, lo_, hi_, segments_, w);
  double v = 0.0;
  for (int a = 0; a < 4; ++a) v += w[static_cast<std::size_t>(a)] * coef_[i + a];
  return v;
}

}  // namespace mipt
