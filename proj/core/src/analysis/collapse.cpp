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

#include "mipt/analysis/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <tuple>

#include "mipt/analysis/spline.hpp"
#include "mipt/error.hpp"
#include "mipt/random.hpp"

namespace mipt {
namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr int kGoldenIterations = 60;
constexpr double kFlatTolerance = 1e-6;

std::vector<ScaledPoint> rescale(const std::vector<CollapsePoint>& points, double nu, double p_c) {
  std::vector<ScaledPoint> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back({pt.n, pt.p, scaling_variable(pt.p, pt.n, p_c, nu), pt.value});
  return out;
}

std::vector<CollapsePoint> select_branch(const std::vector<CollapsePoint>& points, PhaseBranch branch, double p_c) {
  std::vector<CollapsePoint> out;
  for (const auto& pt : points) {
    if ((branch == PhaseBranch::kArea && pt.p > p_c) || (branch == PhaseBranch::kVolume && pt.p < p_c)) {
      out.push_back(pt);
    }
  }
  return out;
}

}  // namespace

std::string to_string(PhaseBranch branch) { return branch == PhaseBranch::kArea ? "area" : "volume"; }

double scaling_variable(double p, int n, double p_c, double nu) {
  return (p - p_c) * std::pow(static_cast<double>(n), 1.0 / nu);
}

double collapse_objective(const std::vector<CollapsePoint>& points, double nu, const CollapseOptions& options) {
  const auto scaled = rescale(points, nu, options.p_c);
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& s : scaled) {
    x.push_back(s.x);
    y.push_back(s.value);
  }
  const auto spline = SmoothingSpline::fit(x, y, options.spline_segments, options.smoothing);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = spline(x[i]) - y[i];
    sum += r * r;
  }
  return sum / static_cast<double>(x.size());
}

CollapseResult data_collapse(const std::vector<CollapsePoint>& all_points, PhaseBranch branch,
                             const CollapseOptions& options) {
  if (!(options.nu_lo > 0.0) || !(options.nu_hi > options.nu_lo)) {
    throw InvalidArgument("nu search interval must satisfy 0 < lo < hi");
  }
  if (options.grid_points < 3) throw InvalidArgument("nu grid needs at least 3 points");
  const auto points = select_branch(all_points, branch, options.p_c);
  std::set<int> sizes;
  for (const auto& pt : points) sizes.insert(pt.n);
  if (sizes.size() < 3) throw InvalidArgument("data collapse needs at least 3 distinct system sizes on the branch");

  const auto objective = [&](double nu) { return collapse_objective(points, nu, options); };
  const double log_lo = std::log(options.nu_lo);
  const double log_hi = std::log(options.nu_hi);
  const int g = options.grid_points;
  std::vector<double> grid(static_cast<std::size_t>(g));
  std::vector<double> values(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    grid[static_cast<std::size_t>(i)] = std::exp(log_lo + (log_hi - log_lo) * i / (g - 1));
    values[static_cast<std::size_t>(i)] = objective(grid[static_cast<std::size_t>(i)]);
  }
  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best = static_cast<int>(best_it - values.begin());
  const double vmin = *best_it;
  const double vmax = *std::max_element(values.begin(), values.end());

  // Golden-section refinement in log(nu) on the bracketing grid cells.
  double a = std::log(grid[static_cast<std::size_t>(std::max(best - 1, 0))]);
  double b = std::log(grid[static_cast<std::size_t>(std::min(best + 1, g - 1))]);
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = objective(std::exp(c));
  double fd = objective(std::exp(d));
  for (int it = 0; it < kGoldenIterations; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = objective(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = objective(std::exp(d));
    }
  }
  double nu = std::exp(0.5 * (a + b));
  double res = objective(nu);
  if (res > vmin) {
    nu = grid[static_cast<std::size_t>(best)];
    res = vmin;
  }

  CollapseResult out;
  out.nu = nu;
  out.p_c = options.p_c;
  out.branch = branch;
  out.residual = res;
  const bool on_boundary = best == 0 || best == g - 1;
  const bool flat = (vmax - vmin) <= kFlatTolerance * std::max(vmax, std::numeric_limits<double>::min());
  out.degenerate = on_boundary || flat;
  out.points = rescale(points, nu, options.p_c);
  std::sort(out.points.begin(), out.points.end(), [](const ScaledPoint& l, const ScaledPoint& r) {
    return std::tie(l.x, l.n, l.p) < std::tie(r.x, r.n, r.p);
  });
  if (out.points.size() >= 5) {
    std::vector<double> ax;
    std::vector<double> ay;
    for (const auto& s : out.points) {
      ax.push_back(std::abs(s.x));
      ay.push_back(s.value);
    }
    out.master_fit = fit_exponential(ax, ay, branch == PhaseBranch::kVolume);
  }
  return out;
}

std::vector<CollapsePoint> synthetic_collapse_data(const std::function<double(double)>& master, double nu,
                                                   double p_c, const std::vector<int>& n_values,
                                                   const std::vector<double>& p_values, double noise,
                                                   std::uint64_t seed) {
  std::vector<CollapsePoint> out;
  for (int n : n_values) {
    for (std::size_t j = 0; j < p_values.size(); ++j) {
      std::mt19937_64 rng = event_rng(seed, StreamPurpose::kSynthetic, static_cast<std::uint64_t>(n), j);
      const double p = p_values[j];
      double v = master(scaling_variable(p, n, p_c, nu));
      if (noise > 0.0) v += std::normal_distribution<double>(0.0, noise)(rng);
      out.push_back({n, p, v});
    }
  }
  return out;
}

}  // namespace mipt
