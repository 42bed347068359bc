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

#include <span>

namespace mipt {

/// Lower bound 1 - ((1-P)/P) e^{-2 beta gap} on the fidelity between the
/// finite-beta and infinite-beta imaginary-time states. Negative (vacuous)
/// for small beta. Throws InvalidArgument unless 0 < P <= 1.
double fidelity_bound(double born_p, double beta, double gap);

/// Exact fidelity 1 / (1 + sum_{i>=1} (w_i / w_0) e^{-2 beta (E_i - E_0)}),
/// where w_i is the squared amplitude on energy level E_i and E_0 is the
/// strict minimum. beta may be +infinity.
double exact_fidelity_closed_form(std::span<const double> weights, std::span<const double> energies,
                                  double beta);

}  // namespace mipt
