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

#include <variant>

#include "mipt/circuit/record.hpp"
#include "mipt/dense/state_vector.hpp"
#include "mipt/stabilizer/tableau.hpp"

namespace mipt {

using TrajectoryState = std::variant<StabilizerTableau, StateVector>;

struct Recording {
  TrajectoryRecord record;
  /// State at the end of the recording run.
  TrajectoryState final_state;
};

/// Simulates one trajectory of `spec` from its initial basis state and
/// records every gate and measurement. Clifford circuits run on the
/// tableau, Haar circuits on a dense state (n <= kDenseQubitCap).
///
/// Randomness is drawn per event from streams keyed by (seed, purpose,
/// layer, slot): gate choice, whether a qubit is measured, and its outcome
/// are independent of one another and of iteration order.
Recording generate_and_record(const CircuitSpec& spec);

/// Initial state of `spec` in the backend matching its gate family.
TrajectoryState initial_state(const CircuitSpec& spec);

/// Applies all gates and force-projects every recorded outcome.
/// Throws ImpossibleOutcome when the record is inconsistent.
TrajectoryState replay_reference(const TrajectoryRecord& record);

/// Dense replay of any record (Clifford gates via their 4x4 matrices).
/// When `project_measurements` is false, measurement events are skipped.
StateVector replay_dense(const TrajectoryRecord& record, bool project_measurements = true);

/// Gate of `event` as a 4x4 unitary.
Eigen::Matrix4cd gate_matrix(const GateEvent& event);

}  // namespace mipt
