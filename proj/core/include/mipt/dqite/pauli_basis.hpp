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

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace mipt {

/// Pauli strings on k local qubits, indexed in base 4 little-endian:
/// digit j (value (index >> 2j) & 3) is the Pauli on local qubit j with
/// 0=I, 1=X, 2=Y, 3=Z.
struct LocalPauliIndex {
  std::uint64_t xmask = 0;
  std::uint64_t zmask = 0;
  /// Number of Y factors (the operator carries i^{#Y} relative to X^x Z^z).
  int y_count = 0;

  static LocalPauliIndex decode(std::uint64_t index, int k);
};

inline std::uint64_t pauli_basis_size(int k) { return std::uint64_t{1} << (2 * k); }

/// Base-4 digit string, character j for local qubit j ("0132").
std::string pauli_index_to_digits(std::uint64_t index, int k);
std::uint64_t pauli_index_from_digits(const std::string& digits);

/// Tr(rho sigma_I) for every I in [0, 4^k), rho a 2^k x 2^k matrix.
Eigen::VectorXd pauli_expectations(const Eigen::MatrixXcd& rho);

/// (1 / 2^k) sum_I e_I sigma_I.
Eigen::MatrixXcd operator_from_expectations(const Eigen::VectorXd& expectations, int k);

/// sum_I a_I sigma_I.
Eigen::MatrixXcd operator_from_coefficients(const Eigen::VectorXd& coefficients, int k);

/// a_I = Re Tr(sigma_I A) / 2^k, the coordinates of Hermitian A.
Eigen::VectorXd coefficients_from_operator(const Eigen::MatrixXcd& a, int k);

/// Dense matrix of sigma_I built from Kronecker products of 2x2 Paulis.
Eigen::MatrixXcd pauli_matrix(std::uint64_t index, int k);

}  // namespace mipt
