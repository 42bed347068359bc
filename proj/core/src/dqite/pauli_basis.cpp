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

#include "mipt/dqite/pauli_basis.hpp"

#include <bit>
#include <complex>

#include "mipt/error.hpp"

namespace mipt {
namespace {

using cd = std::complex<double>;

const cd kPowI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Matrix element <i ^ x | sigma | i> = i^{#Y} (-1)^{popcount(i & z)}.
inline cd element(const LocalPauliIndex& p, std::uint64_t i) {
  const cd base = kPowI[p.y_count % 4];
  return (std::popcount(i & p.zmask) & 1) ? -base : base;
}

}  // namespace

LocalPauliIndex LocalPauliIndex::decode(std::uint64_t index, int k) {
  LocalPauliIndex p;
  for (int j = 0; j < k; ++j) {
    const unsigned d = static_cast<unsigned>((index >> (2 * j)) & 3U);
    if (d == 1 || d == 2) p.xmask |= std::uint64_t{1} << j;
    if (d == 2 || d == 3) p.zmask |= std::uint64_t{1} << j;
    if (d == 2) ++p.y_count;
  }
  return p;
}

std::string pauli_index_to_digits(std::uint64_t index, int k) {
  std::string s;
  for (int j = 0; j < k; ++j) s.push_back(static_cast<char>('0' + ((index >> (2 * j)) & 3U)));
  return s;
}

std::uint64_t pauli_index_from_digits(const std::string& digits) {
  if (digits.size() > 31) throw InvalidArgument("Pauli digit string too long");
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    const char c = digits[j];
    if (c < '0' || c > '3') throw InvalidArgument("Pauli digit must be 0..3");
    index |= static_cast<std::uint64_t>(c - '0') << (2 * j);
  }
  return index;
}

Eigen::VectorXd pauli_expectations(const Eigen::MatrixXcd& rho) {
  const auto d = static_cast<std::uint64_t>(rho.rows());
  const int k = std::countr_zero(d);
  const std::uint64_t count = pauli_basis_size(k);
  Eigen::VectorXd out(static_cast<Eigen::Index>(count));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const LocalPauliIndex p = LocalPauliIndex::decode(idx, k);
    cd acc = 0.0;
    // Tr(rho sigma) = sum_i rho(i, i^x) <i^x|sigma|i>.
    for (std::uint64_t i = 0; i < d; ++i) {
      acc += rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i ^ p.xmask)) * element(p, i);
    }
    out[static_cast<Eigen::Index>(idx)] = acc.real();
  }
  return out;
}

Eigen::MatrixXcd operator_from_coefficients(const Eigen::VectorXd& coefficients, int k) {
  const std::uint64_t d = std::uint64_t{1} << k;
  if (static_cast<std::uint64_t>(coefficients.size()) != pauli_basis_size(k)) {
    throw InvalidArgument("coefficient vector must have 4^k entries");
  }
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::uint64_t idx = 0; idx < pauli_basis_size(k); ++idx) {
    const double c = coefficients[static_cast<Eigen::Index>(idx)];
    if (c == 0.0) continue;
    const LocalPauliIndex p = LocalPauliIndex::decode(idx, k);
    for (std::uint64_t i = 0; i < d; ++i) {
      a(static_cast<Eigen::Index>(i ^ p.xmask), static_cast<Eigen::Index>(i)) += c * element(p, i);
    }
  }
  return a;
}

Eigen::MatrixXcd operator_from_expectations(const Eigen::VectorXd& expectations, int k) {
  return operator_from_coefficients(expectations, k) / static_cast<double>(std::uint64_t{1} << k);
}

Eigen::VectorXd coefficients_from_operator(const Eigen::MatrixXcd& a, int k) {
  const std::uint64_t d = std::uint64_t{1} << k;
  const std::uint64_t count = pauli_basis_size(k);
  Eigen::VectorXd out(static_cast<Eigen::Index>(count));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const LocalPauliIndex p = LocalPauliIndex::decode(idx, k);
    cd acc = 0.0;
    // Tr(sigma A) = sum_i <i|sigma|i^x> A(i^x, i); sigma is Hermitian so
    // <i|sigma|i^x> = conj(<i^x|sigma|i>).
    for (std::uint64_t i = 0; i < d; ++i) {
      acc += std::conj(element(p, i)) *
             a(static_cast<Eigen::Index>(i ^ p.xmask), static_cast<Eigen::Index>(i));
    }
    out[static_cast<Eigen::Index>(idx)] = acc.real() / static_cast<double>(d);
  }
  return out;
}

Eigen::MatrixXcd pauli_matrix(std::uint64_t index, int k) {
  Eigen::Matrix2cd paulis[4];
  paulis[0] << 1, 0, 0, 1;
  paulis[1] << 0, 1, 1, 0;
  paulis[2] << 0, cd(0, -1), cd(0, 1), 0;
  paulis[3] << 1, 0, 0, -1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  // Local qubit j is bit j, so qubit k-1 is the slowest index: build
  // sigma_{k-1} (x) ... (x) sigma_0.
  for (int j = k - 1; j >= 0; --j) {
    const Eigen::Matrix2cd& s = paulis[(index >> (2 * j)) & 3U];
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) next(2 * r + a, 2 * c + b) = out(r, c) * s(a, b);
    out = std::move(next);
  }
  return out;
}

}  // namespace mipt
