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

#include "mipt/analysis/bounds_report.hpp"

#include "mipt/dense/fidelity_bounds.hpp"
#include "mipt/error.hpp"

namespace mipt {

BoundsReport eval_bounds_report(double born_p, int num_measurements, double epsilon, double gap, double dtau) {
  if (!(born_p > 0.0 && born_p <= 1.0)) throw InvalidArgument("Born probability must lie in (0, 1]");
  const ErrorBudget b = make_error_budget(epsilon, num_measurements, born_p, gap, dtau);
  BoundsReport r;
  r.born_p = born_p;
  r.num_measurements = num_measurements;
  r.epsilon = epsilon;
  r.gap = gap;
  r.dtau = dtau;
  r.c = (1.0 - born_p) / born_p;
  r.epsilon_beta = b.epsilon_beta;
  r.beta = b.beta_required;
  r.n_beta = b.n_beta;
  r.t_beta = b.per_measurement_runtime;
  r.runtime_total = b.runtime_estimate;
  r.fidelity_bound = fidelity_bound(born_p, r.beta, gap);
  return r;
}

}  // namespace mipt
