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

#include "mipt/analysis/gadget.hpp"

#include <cmath>

#include "mipt/dense/state_vector.hpp"
#include "mipt/error.hpp"

namespace mipt {

std::string to_string(GadgetMode mode) { return mode == GadgetMode::kExact ? "exact" : "dqite"; }

GadgetMode parse_gadget_mode(const std::string& text) {
  if (text == "exact") return GadgetMode::kExact;
  if (text == "dqite") return GadgetMode::kDqite;
  throw InvalidArgument("unknown gadget mode '" + text + "' (expected exact or dqite)");
}

std::pair<double, double> gadget_amplitudes(int k_amp) {
  const double ratio = std::ldexp(1.0, -k_amp);
  const double beta_amp = 1.0 / std::sqrt(1.0 + ratio * ratio);
  return {ratio * beta_amp, beta_amp};
}

GadgetResult amplification_gadget(int k_amp, int m, GadgetMode mode, const QiteConfig& config) {
  if (k_amp < 1) throw InvalidArgument("k_amp must be >= 1");
  if (m < 0) throw InvalidArgument("ancilla count must be >= 0");
  const int n = 2 + m;
  if (n > kDenseQubitCap) {
    throw InvalidArgument("gadget needs " + std::to_string(n) + " qubits, above the dense cap of " +
                          std::to_string(kDenseQubitCap));
  }
  GadgetResult out;
  out.k_amp = k_amp;
  out.m = m;
  out.mode = mode;
  std::tie(out.alpha, out.beta_amp) = gadget_amplitudes(k_amp);
  const double a2 = out.alpha * out.alpha;
  const double b2 = out.beta_amp * out.beta_amp;

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  amps[0] = out.alpha;
  amps[0b11] = out.beta_amp;
  StateVector state = StateVector::from_amplitudes(amps);

  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd ch = Eigen::Matrix4cd::Zero();
  // Local index b0 + 2 b1 with b0 the control.
  ch(0, 0) = 1.0;
  ch(2, 2) = 1.0;
  ch(1, 1) = s;
  ch(1, 3) = s;
  ch(3, 1) = s;
  ch(3, 3) = -s;
  for (int j = 0; j < m; ++j) apply_2q_unitary(state, ch, 0, 2 + j);

  for (int k = 0; k < m; ++k) {
    const int q = 2 + k;
    out.predicted_probabilities.push_back((a2 + b2 / std::ldexp(1.0, k + 1)) / (a2 + b2 / std::ldexp(1.0, k)));
    out.step_probabilities.push_back(born_probability(state, q, 0));
    if (mode == GadgetMode::kExact) {
      project_z(state, q, 0);
    } else {
      QiteConfig cfg = config;
      std::vector<int> domain{0, 1};
      for (int j = q; j < n && static_cast<int>(domain.size()) < kMaxDomainSize; ++j) domain.push_back(j);
      cfg.domain = Subsystem(domain, n);
      state = deterministic_postselect(state, q, 0, cfg, false, static_cast<std::uint64_t>(k)).state;
    }
  }
  const StateVector small_branch = StateVector::basis(n, 0);
  out.final_fidelity = fidelity(state, small_branch);
  out.predicted_final_fidelity = a2 / (a2 + b2 / std::ldexp(1.0, m));
  return out;
}

}  // namespace mipt
