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

#include "mipt/dense/haar.hpp"

#include <complex>

#include <Eigen/QR>

namespace mipt {

Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = std::complex<double>(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int i = 0; i < dim; ++i) {
    const std::complex<double> d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= mag > 0.0 ? d / mag : std::complex<double>(1.0, 0.0);
  }
  return q;
}

}  // namespace mipt
