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

#include <string>
#include <vector>

#include "mipt/dqite/qite.hpp"

namespace mipt {

enum class GadgetMode { kExact, kDqite };

std::string to_string(GadgetMode mode);
GadgetMode parse_gadget_mode(const std::string& text);

struct GadgetResult {
  int k_amp = 0;
  int m = 0;
  GadgetMode mode = GadgetMode::kExact;
  /// Amplitudes of the small branch |0>|phi_0> and the large branch |1>|phi_1>.
  double alpha = 0.0;
  double beta_amp = 0.0;
  /// Born probability of ancilla outcome 0 at each postselection.
  std::vector<double> step_probabilities;
  /// (alpha^2 + beta'^2 / 2^{k+1}) / (alpha^2 + beta'^2 / 2^k).
  std::vector<double> predicted_probabilities;
  /// Overlap of the final state with |0>|phi_0>|0...0>.
  double final_fidelity = 0.0;
  /// alpha^2 / (alpha^2 + beta'^2 / 2^m).
  double predicted_final_fidelity = 0.0;
};

/// Branch amplitudes with alpha / beta' = 2^{-k_amp}, alpha^2 + beta'^2 = 1.
std::pair<double, double> gadget_amplitudes(int k_amp);

/// Qubit 0 is the branch control, qubit 1 holds |phi_0> = |0> or |phi_1> = |1>,
/// and qubits 2..m+1 are ancillas hit by controlled-Hadamards from qubit 0
/// and then postselected onto |0> one at a time. In DQITE mode each
/// postselection is learned with `config` on a domain holding qubits 0 and 1,
/// the current ancilla and as many later ancillas as the domain cap allows.
GadgetResult amplification_gadget(int k_amp, int m, GadgetMode mode, const QiteConfig& config = {});

}  // namespace mipt
