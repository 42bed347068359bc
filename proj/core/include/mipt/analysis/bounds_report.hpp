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

#include "mipt/dqite/budget.hpp"

namespace mipt {

/// Budget quantities and the fidelity bound at the chosen imaginary time.
struct BoundsReport {
  double born_p = 0.0;
  int num_measurements = 0;
  double epsilon = 0.0;
  double gap = kOutcomeGap;
  double dtau = 0.1;
  /// (1 - P) / P.
  double c = 0.0;
  double epsilon_beta = 0.0;
  double beta = 0.0;
  int n_beta = 0;
  double t_beta = 0.0;
  double runtime_total = 0.0;
  double fidelity_bound = 0.0;
};

/// Throws InvalidArgument unless 0 < P <= 1, M >= 1, epsilon > 0, gap > 0, dtau > 0.
BoundsReport eval_bounds_report(double born_p, int num_measurements, double epsilon, double gap,
                                double dtau = 0.1);

}  // namespace mipt
