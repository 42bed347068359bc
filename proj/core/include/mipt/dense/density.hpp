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

#include <Eigen/Core>

#include "mipt/dense/state_vector.hpp"
#include "mipt/subsystem.hpp"

namespace mipt {

/// Largest region accepted by reduced_density by default.
inline constexpr int kReducedRegionCap = 12;

/// d x d density matrix: Hermitian, unit trace, eigenvalues >= -1e-10.
struct DensityMatrix {
  Eigen::MatrixXcd matrix;

  Eigen::Index dim() const { return matrix.rows(); }
  double purity() const;
  /// Checks the invariants above at tolerance `tol`.
  bool valid(double tol = 1e-10) const;
};

/// Partial trace over the complement of `region`. Local index bit j
/// corresponds to region[j]. Throws InvalidArgument if |region| > cap.
DensityMatrix reduced_density(const StateVector& state, const Subsystem& region,
                              int cap = kReducedRegionCap);

/// -sum lambda log2 lambda over eigenvalues above 1e-14.
double entropy_vn(const DensityMatrix& rho);

/// Convenience: entropy_vn(reduced_density(state, region)).
double entanglement_entropy(const StateVector& state, const Subsystem& region);

/// S(A) + S(C) - S(A u C) from reduced density matrices.
double mutual_info(const StateVector& state, const Subsystem& a, const Subsystem& c);

}  // namespace mipt
