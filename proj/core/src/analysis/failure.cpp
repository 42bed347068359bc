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

#include "mipt/analysis/failure.hpp"

#include <algorithm>
#include <cmath>

#include "mipt/error.hpp"

namespace mipt {

double Polynomial::operator()(double n, double m) const {
  double v = 0.0;
  for (const auto& t : terms) v += t.coef * std::pow(n, t.n_degree) * std::pow(m, t.m_degree);
  return v;
}

FailureBound failure_probability_bound(int num_measurements, int n, const Polynomial& poly) {
  if (num_measurements < 1) throw InvalidArgument("measurement count must be >= 1");
  if (n < 1) throw InvalidArgument("qubit count must be >= 1");
  FailureBound out;
  out.num_measurements = num_measurements;
  out.n = n;
  out.poly_value = poly(n, num_measurements);
  if (!(out.poly_value > 0.0) || !std::isfinite(out.poly_value)) {
    throw InvalidArgument("poly(n, M) must be positive and finite");
  }
  const double m = num_measurements;
  out.delta = 1.0 / (m * out.poly_value);
  out.approx = 1.0 / out.poly_value;
  out.degenerate = out.delta >= 1.0;
  out.bound = out.degenerate ? 1.0 : std::clamp(-std::expm1(m * std::log1p(-out.delta)), 0.0, 1.0);
  return out;
}

}  // namespace mipt
