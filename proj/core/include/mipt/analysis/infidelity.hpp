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
#include <vector>

#include "mipt/dqite/qite.hpp"

namespace mipt {

struct InfidelitySweep {
  int n = 10;
  int layers = 10;
  std::vector<double> p_values;
  std::vector<int> r_values;
  std::vector<double> betas;
  int n_traj = 20;
  double dtau = 0.1;
  double lambda = 1e-8;
  TomographyMode tomography = TomographyMode::kExact;
  std::int64_t shots = 1000;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// One (p, r, beta, trajectory) sample.
struct InfidelityRow {
  int n = 0;
  int layers = 0;
  double p = 0.0;
  int r = 0;
  double beta = 0.0;
  int trajectory_id = 0;
  int target_outcome = 0;
  double born_p = 0.0;
  /// 1 - F after ceil(beta / dtau) learned steps.
  double infidelity = 0.0;
  /// 1 - F for the exact nonunitary evolution e^{-beta h}.
  double exact_infidelity = 0.0;
  /// 1 - F from the two-level closed form.
  double closed_form_infidelity = 0.0;
};

/// For each trajectory of the Haar brickwork at each p, postselects qubit 0
/// onto an outcome drawn by the Born rule and records DQITE and exact
/// infidelities at every beta. Rows are ordered by (p, r, beta, trajectory).
std::vector<InfidelityRow> infidelity_sweep(const InfidelitySweep& sweep);

/// Mean infidelity over trajectories for each (p, r, beta).
struct InfidelityMean {
  double p = 0.0;
  int r = 0;
  double beta = 0.0;
  double mean_infidelity = 0.0;
  double mean_exact_infidelity = 0.0;
};

std::vector<InfidelityMean> mean_infidelity(const std::vector<InfidelityRow>& rows);

}  // namespace mipt
