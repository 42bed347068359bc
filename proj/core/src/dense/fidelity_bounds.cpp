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

#include "mipt/dense/fidelity_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "mipt/error.hpp"

namespace mipt {

double fidelity_bound(double born_p, double beta, double gap) {
  if (!(born_p > 0.0 && born_p <= 1.0)) throw InvalidArgument("fidelity_bound needs 0 < P <= 1");
  const double c = (1.0 - born_p) / born_p;
  return 1.0 - c * std::exp(-2.0 * beta * gap);
}

double exact_fidelity_closed_form(std::span<const double> weights, std::span<const double> energies,
                                  double beta) {
  if (weights.empty() || weights.size() != energies.size()) {
    throw InvalidArgument("weights and energies must be nonempty and of equal length");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw InvalidArgument("weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgument("weights must sum to 1");
  const double e0 = energies[0];
  for (std::size_t i = 1; i < energies.size(); ++i) {
    if (!(energies[i] > e0)) throw InvalidArgument("E_0 must be the strict minimum");
  }
  if (!(weights[0] > 0.0)) throw InvalidArgument("ground weight c_0^2 must be nonzero");
  double tail = 0.0;
  for (std::size_t i = 1; i < weights.size(); ++i) {
    const double decay = std::isinf(beta) ? 0.0 : std::exp(-2.0 * beta * (energies[i] - e0));
    tail += (weights[i] / weights[0]) * decay;
  }
  return 1.0 / (1.0 + tail);
}

}  // namespace mipt
