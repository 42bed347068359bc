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

#include "mipt/dense/density.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "mipt/error.hpp"

namespace mipt {

double DensityMatrix::purity() const { return (matrix * matrix).trace().real(); }

bool DensityMatrix::valid(double tol) const {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) return false;
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(matrix.trace() - cplx(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(matrix, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -tol;
}

DensityMatrix reduced_density(const StateVector& state, const Subsystem& region, int cap) {
  const int n = state.num_qubits();
  if (static_cast<int>(region.size()) > cap) {
    throw InvalidArgument("region of " + std::to_string(region.size()) + " qubits exceeds cap " +
                          std::to_string(cap));
  }
  for (int q : region) {
    if (q < 0 || q >= n) throw InvalidArgument("region qubit out of range");
  }
  const int k = static_cast<int>(region.size());
  std::vector<int> rest;
  for (int q = 0; q < n; ++q) {
    if (!region.contains(q)) rest.push_back(q);
  }
  const Eigen::Index local_dim = Eigen::Index{1} << k;
  const Eigen::Index rest_dim = Eigen::Index{1} << rest.size();
  // psi(local, rest) as a local_dim x rest_dim matrix.
  Eigen::MatrixXcd psi(local_dim, rest_dim);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    Eigen::Index l = 0, r = 0;
    for (int j = 0; j < k; ++j) l |= static_cast<Eigen::Index>((i >> region[static_cast<std::size_t>(j)]) & 1U) << j;
    for (std::size_t j = 0; j < rest.size(); ++j) r |= static_cast<Eigen::Index>((i >> rest[j]) & 1U) << j;
    psi(l, r) = state[i];
  }
  DensityMatrix rho;
  rho.matrix = psi * psi.adjoint();
  return rho;
}

double entropy_vn(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.matrix, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const double lam = eig.eigenvalues()[i];
    if (lam > 1e-14) s -= lam * std::log2(lam);
  }
  return s;
}

double entanglement_entropy(const StateVector& state, const Subsystem& region) {
  if (region.empty()) return 0.0;
  // S(A) = S(complement) for pure states; trace out the larger side.
  if (2 * static_cast<int>(region.size()) > state.num_qubits()) {
    std::vector<int> rest;
    for (int q = 0; q < state.num_qubits(); ++q) {
      if (!region.contains(q)) rest.push_back(q);
    }
    if (rest.empty()) return 0.0;
    return entropy_vn(reduced_density(state, Subsystem(rest, state.num_qubits()), kDenseQubitCap));
  }
  return entropy_vn(reduced_density(state, region, kDenseQubitCap));
}

double mutual_info(const StateVector& state, const Subsystem& a, const Subsystem& c) {
  if (!a.disjoint(c)) throw InvalidArgument("mutual_info regions overlap");
  return entanglement_entropy(state, a) + entanglement_entropy(state, c) -
         entanglement_entropy(state, a.united(c, state.num_qubits()));
}

}  // namespace mipt
