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

#include "mipt/dense/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "mipt/error.hpp"

namespace mipt {
namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw InvalidArgument("qubit " + std::to_string(q) + " out of range");
}

}  // namespace

StateVector::StateVector(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kDenseQubitCap) {
    throw InvalidArgument("dense state needs 1.." + std::to_string(kDenseQubitCap) + " qubits, got " +
                          std::to_string(num_qubits));
  }
  amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dim()) throw InvalidArgument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(Eigen::VectorXcd amplitudes) {
  const auto size = static_cast<std::uint64_t>(amplitudes.size());
  if (size < 2 || !std::has_single_bit(size)) throw InvalidArgument("amplitude count must be 2^n, n >= 1");
  const int n = std::countr_zero(size);
  if (n > kDenseQubitCap) throw InvalidArgument("state exceeds dense qubit cap");
  StateVector s;
  s.n_ = n;
  const double nrm = amplitudes.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw InvalidArgument("amplitudes must have finite nonzero norm");
  s.amps_ = std::move(amplitudes) / nrm;
  return s;
}

void StateVector::normalize() {
  const double nrm = amps_.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw NumericalError("cannot normalize a zero or non-finite state");
  amps_ /= nrm;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

void require_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (!is_unitary(u, tol)) throw InvalidArgument("operator is not unitary within tolerance");
}

void apply_2q_unitary(StateVector& state, const Eigen::Matrix4cd& u, int q0, int q1) {
  const int n = state.num_qubits();
  check_qubit(q0, n);
  check_qubit(q1, n);
  if (q0 == q1) throw InvalidArgument("two-qubit gate on equal qubits");
  require_unitary(u);
  Eigen::VectorXcd& a = state.mutable_amplitudes();
  const std::size_t m0 = std::size_t{1} << q0, m1 = std::size_t{1} << q1;
  const std::size_t dim = state.dim();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & (m0 | m1)) continue;
    const Eigen::Index i0 = static_cast<Eigen::Index>(base), i1 = static_cast<Eigen::Index>(base | m0),
                       i2 = static_cast<Eigen::Index>(base | m1), i3 = static_cast<Eigen::Index>(base | m0 | m1);
    const cplx v0 = a[i0], v1 = a[i1], v2 = a[i2], v3 = a[i3];
    a[i0] = u(0, 0) * v0 + u(0, 1) * v1 + u(0, 2) * v2 + u(0, 3) * v3;
    a[i1] = u(1, 0) * v0 + u(1, 1) * v1 + u(1, 2) * v2 + u(1, 3) * v3;
    a[i2] = u(2, 0) * v0 + u(2, 1) * v1 + u(2, 2) * v2 + u(2, 3) * v3;
    a[i3] = u(3, 0) * v0 + u(3, 1) * v1 + u(3, 2) * v2 + u(3, 3) * v3;
  }
}

void apply_local_matrix(StateVector& state, const Eigen::MatrixXcd& m, const Subsystem& support) {
  const std::size_t k = support.size();
  const std::size_t local_dim = std::size_t{1} << k;
  if (static_cast<std::size_t>(m.rows()) != local_dim || static_cast<std::size_t>(m.cols()) != local_dim) {
    throw InvalidArgument("local matrix dimension does not match support size");
  }
  for (int q : support) check_qubit(q, state.num_qubits());
  std::vector<std::size_t> offset(local_dim, 0);
  std::size_t mask = 0;
  for (std::size_t l = 0; l < local_dim; ++l) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((l >> j) & 1U) offset[l] |= std::size_t{1} << support[j];
    }
  }
  for (int q : support) mask |= std::size_t{1} << q;
  Eigen::VectorXcd& a = state.mutable_amplitudes();
  Eigen::VectorXcd in(static_cast<Eigen::Index>(local_dim));
  Eigen::VectorXcd out(static_cast<Eigen::Index>(local_dim));
  for (std::size_t base = 0; base < state.dim(); ++base) {
    if (base & mask) continue;
    for (std::size_t l = 0; l < local_dim; ++l) in[static_cast<Eigen::Index>(l)] = a[static_cast<Eigen::Index>(base | offset[l])];
    out.noalias() = m * in;
    for (std::size_t l = 0; l < local_dim; ++l) a[static_cast<Eigen::Index>(base | offset[l])] = out[static_cast<Eigen::Index>(l)];
  }
}

double born_probability(const StateVector& state, int q, int outcome) {
  check_qubit(q, state.num_qubits());
  if (outcome != 0 && outcome != 1) throw InvalidArgument("outcome must be 0 or 1");
  const std::size_t m = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (((i & m) != 0) == (outcome == 1)) p += std::norm(state[i]);
  }
  return p;
}

double project_z(StateVector& state, int q, int outcome) {
  const double p = born_probability(state, q, outcome);
  if (p <= kZeroProbability) {
    throw ImpossibleOutcome("outcome " + std::to_string(outcome) + " on qubit " + std::to_string(q) +
                            " has probability " + std::to_string(p));
  }
  const std::size_t m = std::size_t{1} << q;
  Eigen::VectorXcd& a = state.mutable_amplitudes();
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    if (((i & m) != 0) == (outcome == 1)) {
      a[idx] *= scale;
    } else {
      a[idx] = 0.0;
    }
  }
  return p;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw InvalidArgument("fidelity: dimension mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double pauli_expectation(const StateVector& state, const PauliString& sigma) {
  if (static_cast<int>(sigma.size()) != state.num_qubits()) {
    throw InvalidArgument("Pauli string size does not match state");
  }
  std::uint64_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < sigma.size(); ++q) {
    if (sigma.x(q)) xmask |= std::uint64_t{1} << q;
    if (sigma.z(q)) zmask |= std::uint64_t{1} << q;
  }
  // sigma |i> = i^(phase + #Y) (-1)^popcount(i & z) |i ^ x>.
  static const cplx kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx global = kPowI[(sigma.phase() + std::popcount(xmask & zmask)) % 4];
  cplx acc = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    const double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
    acc += std::conj(state[i ^ xmask]) * state[i] * sign;
  }
  return (global * acc).real();
}

}  // namespace mipt
