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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace mipt {

/// Elementary gates used to spell two-qubit Clifford words. Local qubit 0 is
/// the first argument of apply_clifford_2q, local qubit 1 the second.
enum class CliffordOp : std::uint8_t { kH0 = 0, kH1 = 1, kS0 = 2, kS1 = 3, kCX01 = 4 };

/// A labelled Hermitian two-qubit Pauli: bits (x0, z0, x1, z1) packed as
/// bit0..bit3, plus a sign bit.
struct LocalPauli {
  std::uint8_t bits = 0;
  std::uint8_t sign = 0;
  bool operator==(const LocalPauli&) const = default;
};

/// Conjugates p by one elementary gate: p -> g p g^dagger.
LocalPauli conjugate(LocalPauli p, CliffordOp g);

/// One element of the two-qubit Clifford group modulo global phase.
struct Clifford2Q {
  /// Images of X0, Z0, X1, Z1 under conjugation.
  std::array<LocalPauli, 4> images{};
  /// Shortest word (first element applied first) realizing this element.
  std::vector<CliffordOp> word;
  /// Conjugation table for all 16 local Paulis, indexed by their bits.
  std::array<LocalPauli, 16> table{};

  /// 4x4 matrix in the basis |b0 b1> -> index b0 + 2*b1.
  Eigen::Matrix4cd unitary() const;
};

/// Canonical enumeration of the 11520-element two-qubit Clifford group.
///
/// Index = 16 * s + signs, where s is the rank (ascending) of the 16-bit
/// symplectic key img(X0) | img(Z0) << 4 | img(X1) << 8 | img(Z1) << 12
/// among the 720 symplectic matrices of Sp(4, 2), and signs packs the four
/// image sign bits in the same order. The table is built once by BFS over
/// {H0, H1, S0, S1, CX01}; when MIPT_TRAJ_CACHE names a file, the words are
/// read from it if present and written to it otherwise.
class Clifford2QGroup {
 public:
  static constexpr std::uint32_t kOrder = 11520;
  static constexpr std::uint32_t kSymplecticOrder = 720;

  static const Clifford2QGroup& instance();

  const Clifford2Q& operator[](std::uint32_t index) const { return elements_.at(index); }
  std::size_t size() const { return elements_.size(); }

  std::uint32_t index_of(const std::array<LocalPauli, 4>& images) const;
  std::uint32_t index_of_word(std::span<const CliffordOp> word) const;
  std::uint32_t identity_index() const;

  /// Builds the table from scratch, bypassing the cache.
  static Clifford2QGroup build();
  /// Builds from serialized words; throws MalformedInput on inconsistency.
  static Clifford2QGroup from_cache_text(const std::string& text);
  std::string to_cache_text() const;

 private:
  Clifford2QGroup() = default;
  void finalize(std::vector<Clifford2Q> elements);

  std::vector<Clifford2Q> elements_;
  std::vector<std::uint16_t> symplectic_keys_;
};

}  // namespace mipt
