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
#include <span>

namespace mipt {

/// f(x) = a exp(-b x^d) + e.
struct ExpFit {
  double a = 0.0;
  double b = 0.0;
  double d = 1.0;
  double e = 0.0;
  double residual = 0.0;
  bool offset_free = false;
  /// Set when a exp(-b x^d) varies by at most 1e-6 of the data scale over
  /// the sampled range (a ~ 0 or b ~ 0).
  bool degenerate = false;

  double operator()(double x) const;
};

inline constexpr int kFitRestarts = 10;

/// Damped least-squares fit with kFitRestarts deterministic restarts; e is
/// held at 0 unless `offset_free`. Requires x >= 0 and at least five points.
/// Throws NumericalError when no restart converges to a finite fit.
ExpFit fit_exponential(std::span<const double> x, std::span<const double> y, bool offset_free,
                       std::uint64_t seed = 0);

}  // namespace mipt
