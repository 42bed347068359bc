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

#include <complex>
#include <cstdint>

#include <Eigen/Core>

#include "mipt/stabilizer/pauli_string.hpp"
#include "mipt/subsystem.hpp"

namespace mipt {

using cplx = std::complex<double>;

/// Largest qubit count accepted by dense simulation.
inline constexpr int kDenseQubitCap = 24;

/// Dense n-qubit pure state. Qubit q is bit q of the amplitude index, so
/// amplitude i belongs to the basis state with qubit q in |(i >> q) & 1>.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int num_qubits);
  static StateVector basis(int num_qubits, std::uint64_t index);
  /// Normalizes `amplitudes`; throws InvalidArgument unless the length is a
  /// power of two and the norm is nonzero.
  static StateVector from_amplitudes(Eigen::VectorXcd amplitudes);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
  double norm() const { return amps_.norm(); }

  /// Raw access for kernels that restore normalization themselves.
  Eigen::VectorXcd& mutable_amplitudes() { return amps_; }
  void normalize();

 private:
  StateVector() = default;
  int n_ = 0;
  Eigen::VectorXcd amps_;
};

/// Throws InvalidArgument unless ||U^dagger U - 1||_max <= tol.
void require_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);
bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

/// Applies a 4x4 unitary to (q0, q1); local basis index b0 + 2*b1 with b0
/// the bit of q0.
void apply_2q_unitary(StateVector& state, const Eigen::Matrix4cd& u, int q0, int q1);

/// Applies a 2^k x 2^k matrix on `support`, local bit j <-> support[j].
/// No unitarity check and no renormalization.
void apply_local_matrix(StateVector& state, const Eigen::MatrixXcd& m, const Subsystem& support);

/// Probability that measuring q in Z yields `outcome`.
double born_probability(const StateVector& state, int q, int outcome);

/// Zero-probability threshold for projections.
inline constexpr double kZeroProbability = 1e-14;

/// Projects q onto |outcome>, renormalizes, and returns the Born
/// probability. Throws ImpossibleOutcome when it is <= 1e-14.
double project_z(StateVector& state, int q, int outcome);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// Re <psi| sigma |psi> for an n-qubit Pauli string (phase included).
double pauli_expectation(const StateVector& state, const PauliString& sigma);

}  // namespace mipt
