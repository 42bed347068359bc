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

#include "mipt/circuit/generate.hpp"

#include <string>

#include "mipt/dense/haar.hpp"
#include "mipt/error.hpp"
#include "mipt/random.hpp"
#include "mipt/stabilizer/clifford2q.hpp"

namespace mipt {
namespace {

std::uint64_t gate_slot(Sublayer sub, int n, int pair) {
  return static_cast<std::uint64_t>(sub == Sublayer::kEven ? 0 : n) + static_cast<std::uint64_t>(pair);
}

void apply_gate(TrajectoryState& state, const GateEvent& ev) {
  if (auto* tab = std::get_if<StabilizerTableau>(&state)) {
    apply_clifford_2q(*tab, std::get<std::uint32_t>(ev.gate), ev.q0, ev.q1);
  } else {
    apply_2q_unitary(std::get<StateVector>(state), gate_matrix(ev), ev.q0, ev.q1);
  }
}

void check_replayable(const TrajectoryRecord& record) {
  const std::string err = record.validation_error();
  if (!err.empty()) throw InvalidArgument("invalid trajectory record: " + err);
}

}  // namespace

Eigen::Matrix4cd gate_matrix(const GateEvent& event) {
  if (const auto* idx = std::get_if<std::uint32_t>(&event.gate)) {
    return Clifford2QGroup::instance()[*idx].unitary();
  }
  return std::get<Eigen::Matrix4cd>(event.gate);
}

TrajectoryState initial_state(const CircuitSpec& spec) {
  spec.validate();
  if (spec.family == GateFamily::kClifford) {
    StabilizerTableau tab(spec.n);
    for (int q = 0; q < static_cast<int>(spec.initial_bitstring.size()); ++q) {
      if (spec.initial_bitstring[static_cast<std::size_t>(q)] == '1') tab.x(q);
    }
    return tab;
  }
  if (spec.n > kDenseQubitCap) {
    throw InvalidArgument("haar family limited to n <= " + std::to_string(kDenseQubitCap));
  }
  std::uint64_t index = 0;
  for (int q = 0; q < static_cast<int>(spec.initial_bitstring.size()); ++q) {
    if (spec.initial_bitstring[static_cast<std::size_t>(q)] == '1') index |= std::uint64_t{1} << q;
  }
  return StateVector::basis(spec.n, index);
}

Recording generate_and_record(const CircuitSpec& spec) {
  TrajectoryState state = initial_state(spec);
  TrajectoryRecord record;
  record.spec = spec;
  record.gates.reserve(static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.layers));
  const bool clifford = spec.family == GateFamily::kClifford;

  for (int layer = 0; layer < spec.layers; ++layer) {
    for (Sublayer sub : {Sublayer::kEven, Sublayer::kOdd}) {
      const auto pairs = sublayer_pairs(spec.n, sub);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto rng = event_rng(spec.seed, StreamPurpose::kGateChoice, static_cast<std::uint64_t>(layer),
                             gate_slot(sub, spec.n, static_cast<int>(k)));
        GateEvent ev;
        ev.layer = layer;
        ev.sublayer = sub;
        ev.q0 = pairs[k].first;
        ev.q1 = pairs[k].second;
        if (clifford) {
          ev.gate = std::uniform_int_distribution<std::uint32_t>(0, Clifford2QGroup::kOrder - 1)(rng);
        } else {
          ev.gate = Eigen::Matrix4cd(haar_2q(rng));
        }
        apply_gate(state, ev);
        record.gates.push_back(std::move(ev));
      }
    }
    if (layer == spec.layers - 1) break;
    for (int q = 0; q < spec.n; ++q) {
      auto decide = event_rng(spec.seed, StreamPurpose::kMeasureDecision, static_cast<std::uint64_t>(layer),
                              static_cast<std::uint64_t>(q));
      if (!(uniform01(decide) < spec.p)) continue;
      auto outcome_rng = event_rng(spec.seed, StreamPurpose::kMeasureOutcome, static_cast<std::uint64_t>(layer),
                                   static_cast<std::uint64_t>(q));
      MeasurementEvent m;
      m.layer_gap = layer;
      m.qubit = q;
      if (auto* tab = std::get_if<StabilizerTableau>(&state)) {
        const MeasureResult r = measure_z(*tab, q, outcome_rng);
        m.outcome = r.outcome;
        m.born_p = r.born_p;
      } else {
        auto& sv = std::get<StateVector>(state);
        const double p0 = born_probability(sv, q, 0);
        int outcome = uniform01(outcome_rng) < p0 ? 0 : 1;
        // Guard against round-off picking a numerically empty branch.
        if ((outcome == 0 ? p0 : 1.0 - p0) <= kZeroProbability) outcome ^= 1;
        m.outcome = outcome;
        m.born_p = project_z(sv, q, outcome);
      }
      record.measurements.push_back(m);
    }
  }
  return {std::move(record), std::move(state)};
}

TrajectoryState replay_reference(const TrajectoryRecord& record) {
  check_replayable(record);
  TrajectoryState state = initial_state(record.spec);
  std::size_t next_meas = 0;
  std::size_t g = 0;
  for (int layer = 0; layer < record.spec.layers; ++layer) {
    for (; g < record.gates.size() && record.gates[g].layer == layer; ++g) apply_gate(state, record.gates[g]);
    for (; next_meas < record.measurements.size() && record.measurements[next_meas].layer_gap == layer;
         ++next_meas) {
      const auto& m = record.measurements[next_meas];
      if (auto* tab = std::get_if<StabilizerTableau>(&state)) {
        force_z(*tab, m.qubit, m.outcome);
      } else {
        project_z(std::get<StateVector>(state), m.qubit, m.outcome);
      }
    }
  }
  return state;
}

StateVector replay_dense(const TrajectoryRecord& record, bool project_measurements) {
  check_replayable(record);
  if (record.spec.n > kDenseQubitCap) throw InvalidArgument("record exceeds the dense qubit cap");
  CircuitSpec dense_spec = record.spec;
  dense_spec.family = GateFamily::kHaar;
  StateVector state = std::get<StateVector>(initial_state(dense_spec));
  std::size_t next_meas = 0;
  std::size_t g = 0;
  for (int layer = 0; layer < record.spec.layers; ++layer) {
    for (; g < record.gates.size() && record.gates[g].layer == layer; ++g) {
      const auto& ev = record.gates[g];
      apply_2q_unitary(state, gate_matrix(ev), ev.q0, ev.q1);
    }
    for (; next_meas < record.measurements.size() && record.measurements[next_meas].layer_gap == layer;
         ++next_meas) {
      const auto& m = record.measurements[next_meas];
      if (project_measurements) project_z(state, m.qubit, m.outcome);
    }
  }
  return state;
}

}  // namespace mipt
