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

#include "mipt/dense/local_operator.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "mipt/error.hpp"

namespace mipt {

LocalOperator::LocalOperator(Subsystem s, Eigen::MatrixXcd m) : support(std::move(s)), matrix(std::move(m)) {
  const Eigen::Index d = Eigen::Index{1} << support.size();
  if (matrix.rows() != d || matrix.cols() != d) {
    throw InvalidArgument("local operator dimension does not match its support");
  }
}

bool LocalOperator::hermitian(double tol) const {
  return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool LocalOperator::unitary(double tol) const { return is_unitary(matrix, tol); }

LocalOperator pauli_z_operator(int q, int num_qubits, double sign) {
  Eigen::Matrix2cd z;
  z << sign, 0, 0, -sign;
  return LocalOperator(Subsystem({q}, num_qubits), z);
}

void apply_local_unitary(StateVector& state, const LocalOperator& op) {
  require_unitary(op.matrix);
  apply_local_matrix(state, op.matrix, op.support);
  state.normalize();
}

StateVector imaginary_evolve(const StateVector& state, const LocalOperator& h, double beta) {
  if (!(beta >= 0.0)) throw InvalidArgument("beta must be >= 0");
  if (!h.hermitian()) throw InvalidArgument("imaginary_evolve needs a Hermitian operator");
  if (beta == 0.0) return state;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h.matrix);
  const Eigen::VectorXd& energies = eig.eigenvalues();
  const double e0 = energies.minCoeff();
  const double tol = 1e-10 * std::max(1.0, std::abs(e0));
  Eigen::VectorXd weight(energies.size());
  for (Eigen::Index i = 0; i < energies.size(); ++i) {
    const double gap = energies[i] - e0;
    if (std::isinf(beta)) {
      weight[i] = gap <= tol ? 1.0 : 0.0;
    } else {
      weight[i] = std::exp(-beta * gap);
    }
  }
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  const Eigen::MatrixXcd propagator = v * weight.cast<cplx>().asDiagonal() * v.adjoint();
  StateVector out = state;
  apply_local_matrix(out, propagator, h.support);
  const double nrm = out.norm();
  if (!(nrm > 1e-150) || !std::isfinite(nrm)) {
    throw NumericalError("imaginary-time evolved state has vanishing norm");
  }
  if (std::isinf(beta) && nrm * nrm <= kZeroProbability) {
    throw NumericalError("state has no weight in the ground space");
  }
  out.normalize();
  return out;
}

}  // namespace mipt
