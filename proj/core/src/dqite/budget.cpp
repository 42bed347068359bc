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

#include "mipt/dqite/budget.hpp"

#include <algorithm>
#include <cmath>

#include "mipt/error.hpp"

namespace mipt {

double error_budget(double epsilon, int num_measurements) {
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (num_measurements < 1) throw InvalidArgument("measurement count must be >= 1");
  return epsilon / (2.0 * num_measurements);
}

double required_beta(double born_p, int num_measurements, double epsilon, double gap) {
  if (!(born_p > 0.0 && born_p <= 1.0)) throw InvalidArgument("required_beta needs 0 < P <= 1");
  if (num_measurements < 1 || !(epsilon > 0.0) || !(gap > 0.0)) {
    throw InvalidArgument("required_beta needs M >= 1, epsilon > 0, gap > 0");
  }
  if (born_p == 1.0) return 0.0;
  const double c = (1.0 - born_p) / born_p;
  const double beta = std::log(std::sqrt(c) * num_measurements / epsilon) / gap;
  return std::max(beta, 0.0);
}

double runtime_estimate(int num_measurements, double epsilon, double gap, double c) {
  if (num_measurements < 1 || !(epsilon > 0.0) || !(gap > 0.0) || !(c > 0.0)) {
    throw InvalidArgument("runtime_estimate needs positive inputs");
  }
  const double m = num_measurements;
  const double lg = std::log(std::sqrt(c) * m / epsilon);
  return m * m / epsilon / (gap * gap) * lg * lg;
}

int trotter_steps(double beta, double dtau) {
  if (!(dtau > 0.0) || !(beta >= 0.0)) throw InvalidArgument("trotter_steps needs beta >= 0, dtau > 0");
  const double ratio = beta / dtau;
  return static_cast<int>(std::ceil(ratio * (1.0 - 1e-9)));
}

double per_measurement_runtime(int n_beta, double epsilon_beta) {
  if (!(epsilon_beta > 0.0)) throw InvalidArgument("epsilon_beta must be positive");
  return static_cast<double>(n_beta) * n_beta / epsilon_beta;
}

ErrorBudget make_error_budget(double epsilon, int num_measurements, double born_p, double gap, double dtau) {
  ErrorBudget b;
  b.epsilon = epsilon;
  b.num_measurements = num_measurements;
  b.epsilon_beta = error_budget(epsilon, num_measurements);
  b.beta_required = required_beta(born_p, num_measurements, epsilon, gap);
  b.n_beta = trotter_steps(b.beta_required, dtau);
  b.per_measurement_runtime = per_measurement_runtime(b.n_beta, b.epsilon_beta);
  const double c = (1.0 - born_p) / born_p;
  b.runtime_estimate = c > 0.0 ? runtime_estimate(num_measurements, epsilon, gap, c) : 0.0;
  return b;
}

}  // namespace mipt
