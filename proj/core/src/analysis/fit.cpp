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

#include "mipt/analysis/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mipt/error.hpp"
#include "mipt/random.hpp"

namespace mipt {
namespace {

constexpr int kMaxIterations = 2000;
constexpr double kMinExponent = 0.05;
constexpr double kMaxExponent = 6.0;

struct Problem {
  std::span<const double> x;
  std::span<const double> y;
  bool offset_free;
  int num_params() const { return offset_free ? 4 : 3; }
};

double power(double x, double d) { return x == 0.0 ? 0.0 : std::pow(x, d); }

double model(const Eigen::Vector4d& t, double x) { return t[0] * std::exp(-t[1] * power(x, t[2])) + t[3]; }

double sum_squares(const Problem& pr, const Eigen::Vector4d& t) {
  double s = 0.0;
  for (std::size_t i = 0; i < pr.x.size(); ++i) {
    const double r = model(t, pr.x[i]) - pr.y[i];
    s += r * r;
  }
  return s;
}

void jacobian(const Problem& pr, const Eigen::Vector4d& t, Eigen::MatrixXd& jac, Eigen::VectorXd& res) {
  const auto rows = static_cast<Eigen::Index>(pr.x.size());
  jac.resize(rows, pr.num_params());
  res.resize(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double x = pr.x[static_cast<std::size_t>(i)];
    const double xd = power(x, t[2]);
    const double ex = std::exp(-t[1] * xd);
    res[i] = t[0] * ex + t[3] - pr.y[static_cast<std::size_t>(i)];
    jac(i, 0) = ex;
    jac(i, 1) = -t[0] * xd * ex;
    jac(i, 2) = x > 0.0 ? -t[0] * t[1] * xd * std::log(x) * ex : 0.0;
    if (pr.offset_free) jac(i, 3) = 1.0;
  }
}

void project(Eigen::Vector4d& t, bool offset_free) {
  t[1] = std::max(t[1], 0.0);
  t[2] = std::clamp(t[2], kMinExponent, kMaxExponent);
  if (!offset_free) t[3] = 0.0;
}

Eigen::Vector4d levenberg_marquardt(const Problem& pr, Eigen::Vector4d t, double& cost) {
  project(t, pr.offset_free);
  cost = sum_squares(pr, t);
  double mu = 1e-3;
  Eigen::MatrixXd jac;
  Eigen::VectorXd res;
  for (int it = 0; it < kMaxIterations && std::isfinite(cost); ++it) {
    jacobian(pr, t, jac, res);
    const Eigen::MatrixXd h = jac.transpose() * jac;
    const Eigen::VectorXd g = jac.transpose() * res;
    if (g.norm() <= 1e-15 * (1.0 + cost)) break;
    bool accepted = false;
    while (mu < 1e16) {
      Eigen::MatrixXd damped = h;
      for (Eigen::Index k = 0; k < h.rows(); ++k) damped(k, k) += mu * std::max(h(k, k), 1e-12);
      const Eigen::VectorXd step = damped.ldlt().solve(-g);
      Eigen::Vector4d trial = t;
      trial.head(step.size()) += step;
      project(trial, pr.offset_free);
      const double c = sum_squares(pr, trial);
      if (std::isfinite(c) && c < cost) {
        const double gain = cost - c;
        t = trial;
        cost = c;
        mu = std::max(mu * 0.3, 1e-12);
        accepted = true;
        if (gain <= 1e-15 * cost) it = kMaxIterations;
        break;
      }
      mu *= 10.0;
    }
    if (!accepted) break;
  }
  return t;
}

// Log-linear estimate of b at d = 1 through the positive part of y - e.
Eigen::Vector4d initial_guess(const Problem& pr) {
  const double ymin = *std::min_element(pr.y.begin(), pr.y.end());
  const double e0 = pr.offset_free ? ymin - 0.05 * std::abs(ymin) : 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < pr.x.size(); ++i) {
    const double v = pr.y[i] - e0;
    if (v <= 0.0) continue;
    const double ly = std::log(v);
    sx += pr.x[i];
    sy += ly;
    sxx += pr.x[i] * pr.x[i];
    sxy += pr.x[i] * ly;
    ++count;
  }
  double a0 = 1.0;
  double b0 = 0.1;
  if (count >= 2) {
    const double den = count * sxx - sx * sx;
    if (den > 0.0) {
      const double slope = (count * sxy - sx * sy) / den;
      const double icpt = (sy - slope * sx) / count;
      a0 = std::exp(icpt);
      b0 = std::max(-slope, 1e-3);
    }
  }
  return {a0, b0, 1.0, e0};
}

}  // namespace

double ExpFit::operator()(double x) const { return a * std::exp(-b * power(x, d)) + e; }

ExpFit fit_exponential(std::span<const double> x, std::span<const double> y, bool offset_free, std::uint64_t seed) {
  if (x.size() != y.size()) throw InvalidArgument("fit inputs differ in length");
  if (x.size() < 5) throw InvalidArgument("exponential fit needs at least 5 points");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) throw InvalidArgument("fit inputs must be finite");
    if (x[i] < 0.0) throw InvalidArgument("fit abscissae must be nonnegative");
  }
  const Problem pr{x, y, offset_free};
  const Eigen::Vector4d base = initial_guess(pr);
  const double yscale = std::max(std::abs(*std::max_element(y.begin(), y.end())),
                                 std::abs(*std::min_element(y.begin(), y.end())));
  const double xmax = *std::max_element(x.begin(), x.end());

  Eigen::Vector4d best = base;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kFitRestarts; ++k) {
    Eigen::Vector4d start = base;
    if (k > 0) {
      std::mt19937_64 rng = event_rng(seed, StreamPurpose::kFitRestart, static_cast<std::uint64_t>(k));
      const double scale_b = xmax > 0.0 ? 1.0 / xmax : 1.0;
      start[0] = base[0] * std::exp(std::uniform_real_distribution<double>(-1.0, 1.0)(rng));
      start[1] = scale_b * std::exp(std::uniform_real_distribution<double>(-3.0, 3.0)(rng));
      start[2] = std::uniform_real_distribution<double>(0.3, 2.0)(rng);
      if (offset_free) start[3] = base[3] + 0.1 * yscale * std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    }
    double cost = 0.0;
    const Eigen::Vector4d t = levenberg_marquardt(pr, start, cost);
    if (std::isfinite(cost) && t.allFinite() && cost < best_cost) {
      best = t;
      best_cost = cost;
    }
  }
  if (!std::isfinite(best_cost)) throw NumericalError("exponential fit did not converge");

  ExpFit fit{best[0], best[1], best[2], best[3], best_cost, offset_free, false};
  // Degenerate when the decaying part is flat across the sampled range.
  const double xmin = *std::min_element(x.begin(), x.end());
  const double swing = std::abs(fit.a) * std::abs(std::exp(-fit.b * power(xmin, fit.d)) - std::exp(-fit.b * power(xmax, fit.d)));
  fit.degenerate = swing <= 1e-6 * yscale || yscale == 0.0;
  return fit;
}

}  // namespace mipt
