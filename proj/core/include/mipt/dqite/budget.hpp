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

namespace mipt {

/// Energy gap of the single-qubit outcome Hamiltonians +-sigma_Z.
inline constexpr double kOutcomeGap = 2.0;

/// Per-measurement trace-distance budget eps / (2 M).
double error_budget(double epsilon, int num_measurements);

/// Smallest beta with c^{1/2} e^{-beta gap} <= eps / M, c = (1-P)/P:
/// (1/gap) ln(c^{1/2} M / eps), clamped at 0. P = 1 gives 0. Natural log.
double required_beta(double born_p, int num_measurements, double epsilon, double gap);

/// M^2 eps^{-1} gap^{-2} ln^2(c^{1/2} M / eps) with unit constant.
double runtime_estimate(int num_measurements, double epsilon, double gap, double c);

/// ceil(beta / dtau), ignoring a relative round-off of 1e-9 in the ratio.
int trotter_steps(double beta, double dtau);

/// Per-measurement DQITE cost n_beta^2 / eps_beta with unit constant.
double per_measurement_runtime(int n_beta, double epsilon_beta);

/// All budget quantities for one (epsilon, M, P, gap, dtau) choice.
struct ErrorBudget {
  double epsilon = 0.0;
  int num_measurements = 0;
  double epsilon_beta = 0.0;
  double beta_required = 0.0;
  int n_beta = 0;
  double per_measurement_runtime = 0.0;
  double runtime_estimate = 0.0;
};

ErrorBudget make_error_budget(double epsilon, int num_measurements, double born_p, double gap, double dtau);

}  // namespace mipt
