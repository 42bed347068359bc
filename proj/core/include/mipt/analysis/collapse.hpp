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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mipt/analysis/fit.hpp"

namespace mipt {

inline constexpr double kCriticalRate = 0.16;

enum class PhaseBranch { kArea, kVolume };

std::string to_string(PhaseBranch branch);

struct CollapsePoint {
  int n = 0;
  double p = 0.0;
  double value = 0.0;
};

struct CollapseOptions {
  double p_c = kCriticalRate;
  double nu_lo = 0.3;
  double nu_hi = 3.0;
  int grid_points = 55;
  int spline_segments = 8;
  double smoothing = 1e-2;
};

struct ScaledPoint {
  int n = 0;
  double p = 0.0;
  double x = 0.0;
  double value = 0.0;
};

struct CollapseResult {
  double nu = 0.0;
  double p_c = kCriticalRate;
  PhaseBranch branch = PhaseBranch::kArea;
  /// Mean squared deviation from the master curve at `nu`.
  double residual = 0.0;
  /// Optimum on the search boundary or an objective flat across the interval.
  bool degenerate = false;
  std::vector<ScaledPoint> points;
  /// Stretched-exponential fit of the master curve against |x|; e is free on
  /// the volume-law branch and 0 on the area-law branch.
  ExpFit master_fit;
};

/// x = (p - p_c) n^{1/nu}.
double scaling_variable(double p, int n, double p_c, double nu);

/// Mean squared residual of the merged rescaled data against a smoothing
/// spline master curve.
double collapse_objective(const std::vector<CollapsePoint>& points, double nu, const CollapseOptions& options);

/// Keeps the points of `branch` (p > p_c for area, p < p_c for volume),
/// scans nu over a log grid and refines by golden-section search.
/// Throws InvalidArgument with fewer than three distinct n or an empty
/// search interval.
CollapseResult data_collapse(const std::vector<CollapsePoint>& points, PhaseBranch branch,
                             const CollapseOptions& options = {});

/// Samples master(x) at x = (p - p_c) n^{1/nu} with additive Gaussian noise.
std::vector<CollapsePoint> synthetic_collapse_data(const std::function<double(double)>& master, double nu,
                                                   double p_c, const std::vector<int>& n_values,
                                                   const std::vector<double>& p_values, double noise,
                                                   std::uint64_t seed);

}  // namespace mipt
