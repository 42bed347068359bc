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

#include <vector>

namespace mipt {

/// sum_k coef_k n^{n_degree_k} M^{m_degree_k}.
struct Polynomial {
  struct Term {
    double coef = 1.0;
    double n_degree = 0.0;
    double m_degree = 0.0;
  };
  std::vector<Term> terms;

  double operator()(double n, double m) const;
};

struct FailureBound {
  int num_measurements = 0;
  int n = 0;
  double poly_value = 0.0;
  /// delta = 1 / (M poly(n, M)).
  double delta = 0.0;
  /// 1 - (1 - delta)^M.
  double bound = 0.0;
  /// First-order value 1 / poly(n, M).
  double approx = 0.0;
  /// Set when delta >= 1, so the threshold excludes nothing.
  bool degenerate = false;
};

/// Throws InvalidArgument when poly(n, M) <= 0 or M < 1.
FailureBound failure_probability_bound(int num_measurements, int n, const Polynomial& poly);

}  // namespace mipt
