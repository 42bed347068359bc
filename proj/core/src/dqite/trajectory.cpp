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

#include "mipt/dqite/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mipt/circuit/generate.hpp"
#include "mipt/dqite/budget.hpp"
#include "mipt/error.hpp"

namespace mipt {
namespace {

void check_stored(const TrajectoryRecord& record, const std::vector<LearnedPostselection>& stored) {
  if (stored.size() != record.measurements.size()) {
    throw InvalidArgument("learned list has " + std::to_string(stored.size()) + " postselections but the record has " +
                          std::to_string(record.measurements.size()) + " measurements");
  }
  for (std::size_t i = 0; i < stored.size(); ++i) {
    const auto& m = record.measurements[i];
    if (stored[i].target_qubit != m.qubit || stored[i].outcome != m.outcome) {
      throw InvalidArgument("learned postselection " + std::to_string(i) + " does not match the recorded measurement");
    }
  }
}

}  // namespace

ReplayResult replay_trajectory(const TrajectoryRecord& record, const ReplayOptions& options,
                               const std::vector<LearnedPostselection>* stored) {
  const std::string err = record.validation_error();
  if (!err.empty()) throw InvalidArgument("invalid trajectory record: " + err);
  if (record.spec.family != GateFamily::kHaar) {
    throw InvalidArgument("family mismatch: replay needs a record from the haar gate family");
  }
  if (record.spec.n > kDenseQubitCap) throw InvalidArgument("record exceeds the dense qubit cap");
  options.qite.validate();
  if (stored != nullptr) check_stored(record, *stored);
  const int num_meas = static_cast<int>(record.measurements.size());
  if (options.epsilon && !(*options.epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");

  CircuitSpec dense_spec = record.spec;
  dense_spec.family = GateFamily::kHaar;
  StateVector state = std::get<StateVector>(initial_state(dense_spec));
  StateVector reference = state;

  ReplayResult result{{}, state, {}, 1.0, std::nullopt, false};
  if (options.epsilon && num_meas > 0) result.epsilon_beta = error_budget(*options.epsilon, num_meas);
  result.learned.reserve(record.measurements.size());

  std::size_t g = 0;
  std::size_t next = 0;
  for (int layer = 0; layer < record.spec.layers; ++layer) {
    for (; g < record.gates.size() && record.gates[g].layer == layer; ++g) {
      const auto& ev = record.gates[g];
      const Eigen::Matrix4cd u = gate_matrix(ev);
      apply_2q_unitary(state, u, ev.q0, ev.q1);
      apply_2q_unitary(reference, u, ev.q0, ev.q1);
    }
    for (; next < record.measurements.size() && record.measurements[next].layer_gap == layer; ++next) {
      const auto& m = record.measurements[next];
      MeasurementDiagnostics diag;
      diag.layer_gap = m.layer_gap;
      diag.qubit = m.qubit;
      diag.outcome = m.outcome;
      diag.born_p = born_probability(state, m.qubit, m.outcome);

      StateVector target = state;
      const bool reachable = diag.born_p > kZeroProbability;
      if (reachable) project_z(target, m.qubit, m.outcome);

      if (stored != nullptr) {
        const LearnedPostselection& lp = (*stored)[next];
        apply_learned(state, lp);
        diag.n_beta = static_cast<int>(lp.steps.size());
        diag.beta = lp.steps.empty() ? 0.0 : diag.n_beta * lp.steps.front().dtau;
        result.learned.push_back(lp);
      } else {
        QiteConfig cfg = options.qite;
        if (options.epsilon) cfg.beta = required_beta(diag.born_p, num_meas, *options.epsilon, options.gap);
        PostselectResult ps = deterministic_postselect(state, m.qubit, m.outcome, cfg, false, next);
        state = std::move(ps.state);
        diag.beta = cfg.beta;
        diag.n_beta = static_cast<int>(ps.learned.steps.size());
        result.learned.push_back(std::move(ps.learned));
      }

      diag.local_infidelity = reachable ? std::max(0.0, 1.0 - fidelity(state, target)) : 1.0;
      diag.local_trace_distance = std::sqrt(diag.local_infidelity);
      project_z(reference, m.qubit, m.outcome);
      diag.cumulative_infidelity = std::max(0.0, 1.0 - fidelity(state, reference));
      if (result.epsilon_beta && diag.local_infidelity > *result.epsilon_beta) {
        diag.budget_violation = true;
        result.budget_violated = true;
      }
      result.diagnostics.push_back(diag);
    }
  }
  result.final_fidelity = fidelity(state, reference);
  result.state = std::move(state);
  return result;
}

}  // namespace mipt
