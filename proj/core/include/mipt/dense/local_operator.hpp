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

/// An operator acting on `support` only. Local index bit j <-> support[j].
struct LocalOperator {
  Subsystem support;
  Eigen::MatrixXcd matrix;

  LocalOperator() = default;
  /// Throws InvalidArgument when the matrix is not 2^|support| square.
  LocalOperator(Subsystem support, Eigen::MatrixXcd matrix);

  bool hermitian(double tol = 1e-10) const;
  bool unitary(double tol = 1e-10) const;
};

/// Single-qubit sign * sigma_Z on qubit q of an n-qubit register.
LocalOperator pauli_z_operator(int q, int num_qubits, double sign = 1.0);

/// Applies a unitary LocalOperator; throws InvalidArgument if not unitary.
void apply_local_unitary(StateVector& state, const LocalOperator& op);

/// N_beta e^{-beta h} |psi>, computed by diagonalizing h on its support.
/// beta may be +infinity (projection onto the ground space). Throws
/// NumericalError when the result has vanishing norm.
StateVector imaginary_evolve(const StateVector& state, const LocalOperator& h, double beta);

}  // namespace mipt
