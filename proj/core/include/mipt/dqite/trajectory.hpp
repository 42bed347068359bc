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

#include <optional>
#include <vector>

#include "mipt/circuit/record.hpp"
#include "mipt/dense/state_vector.hpp"
#include "mipt/dqite/qite.hpp"

namespace mipt {

/// Settings for replaying a recorded trajectory with learned postselections.
///
/// With `epsilon` set, each measurement gets its own imaginary time from
/// `required_beta` using the Born weight of the recorded outcome on the
/// current state; otherwise `qite.beta` is used throughout.
struct ReplayOptions {
  QiteConfig qite;
  std::optional<double> epsilon;
  double gap = 2.0;
};

struct MeasurementDiagnostics {
  int layer_gap = 0;
  int qubit = 0;
  int outcome = 0;
  double born_p = 0.0;
  double beta = 0.0;
  int n_beta = 0;
  /// Infidelity of the learned output against the exact projection of its input.
  double local_infidelity = 0.0;
  /// Pure-state trace distance sqrt(local_infidelity).
  double local_trace_distance = 0.0;
  /// Infidelity of the running state against the force-projected reference.
  double cumulative_infidelity = 0.0;
  bool budget_violation = false;
};

struct ReplayResult {
  std::vector<LearnedPostselection> learned;
  StateVector state;
  std::vector<MeasurementDiagnostics> diagnostics;
  /// Fidelity of the final state to `replay_reference`.
  double final_fidelity = 1.0;
  std::optional<double> epsilon_beta;
  bool budget_violated = false;
};

/// Replays `record` on a dense state, replacing every recorded projection by
/// deterministic imaginary-time postselection.
///
/// Without `stored` each postselection is learned on the state produced by
/// all earlier gates and learned unitaries. With `stored` the learned steps
/// are applied as-is and nothing is learned. Throws InvalidArgument for
/// records outside the haar family or above the dense cap.
ReplayResult replay_trajectory(const TrajectoryRecord& record, const ReplayOptions& options,
                               const std::vector<LearnedPostselection>* stored = nullptr);

}  // namespace mipt
