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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mipt {

/// Number of 64-bit words needed to hold n bits.
inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Sum over bit positions of the i-exponent picked up when multiplying the
/// labelled Paulis (x1, z1) * (x2, z2), reduced mod 4. A label with both bits
/// set denotes Y.
int pauli_product_phase(const std::uint64_t* x1, const std::uint64_t* z1, const std::uint64_t* x2,
                        const std::uint64_t* z2, std::size_t words);

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... with P_j in
/// {I, X, Y, Z}. Bit pair (x_j, z_j) selects P_j: (0,0)=I, (1,0)=X,
/// (1,1)=Y, (0,1)=Z.
class PauliString {
 public:
  explicit PauliString(std::size_t n = 0);

  /// Parses e.g. "+XIZ", "-iYY", "ZZ". Character j is qubit j.
  static PauliString parse(std::string_view text);

  std::size_t size() const { return n_; }
  bool x(std::size_t q) const { return (xs_[q / 64] >> (q % 64)) & 1U; }
  bool z(std::size_t q) const { return (zs_[q / 64] >> (q % 64)) & 1U; }
  void set_x(std::size_t q, bool v);
  void set_z(std::size_t q, bool v);
  /// Sets qubit q to 'I', 'X', 'Y' or 'Z'.
  void set(std::size_t q, char label);
  char label(std::size_t q) const;

  /// Power of i in {0, 1, 2, 3}.
  int phase() const { return phase_; }
  void set_phase(int power_of_i) { phase_ = static_cast<std::uint8_t>(((power_of_i % 4) + 4) % 4); }
  bool hermitian() const { return phase_ % 2 == 0; }

  bool commutes(const PauliString& other) const;
  std::size_t weight() const;

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) { return lhs *= rhs; }
  bool operator==(const PauliString&) const = default;

  const std::vector<std::uint64_t>& x_words() const { return xs_; }
  const std::vector<std::uint64_t>& z_words() const { return zs_; }

  std::string str() const;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  std::uint8_t phase_ = 0;
};

}  // namespace mipt
