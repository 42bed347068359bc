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
#include <random>
#include <vector>

#include "mipt/stabilizer/gf2.hpp"
#include "mipt/stabilizer/pauli_string.hpp"
#include "mipt/subsystem.hpp"

namespace mipt {

struct Clifford2Q;
class StabilizerTableau;

struct MeasureResult {
  int outcome;
  /// 1.0 for a deterministic outcome, 0.5 for a random one.
  double born_p;
};

MeasureResult measure_z(StabilizerTableau& tab, int q, std::mt19937_64& rng);
void force_z(StabilizerTableau& tab, int q, int outcome);

/// Aaronson-Gottesman tableau: n destabilizer rows, n stabilizer rows and
/// one scratch row, each stored as packed x/z words plus a sign bit.
class StabilizerTableau {
 public:
  /// |0...0>.
  explicit StabilizerTableau(int num_qubits);

  int num_qubits() const { return n_; }

  PauliString stabilizer(int i) const { return row_pauli(static_cast<std::size_t>(n_ + i)); }
  PauliString destabilizer(int i) const { return row_pauli(static_cast<std::size_t>(i)); }

  void h(int q);
  void s(int q);
  void x(int q);
  void cx(int control, int target);

  /// Applies the conjugation table of a two-qubit Clifford to qubits (q0, q1).
  void apply_local_table(const Clifford2Q& gate, int q0, int q1);

  /// True when a Z measurement of q has a deterministic outcome.
  bool is_deterministic_z(int q) const;

  /// Symplectic check: stabilizers mutually commute, destabilizers mutually
  /// commute, destabilizer i anticommutes with stabilizer i only.
  bool check_invariants() const;

  /// Stabilizer generators restricted to the x/z columns of `region`.
  BitMatrix restricted_stabilizers(const Subsystem& region) const;

  bool operator==(const StabilizerTableau&) const = default;

 private:
  bool xb(std::size_t row, int q) const { return (xs_[row * w_ + static_cast<std::size_t>(q) / 64] >> (q % 64)) & 1U; }
  bool zb(std::size_t row, int q) const { return (zs_[row * w_ + static_cast<std::size_t>(q) / 64] >> (q % 64)) & 1U; }
  std::uint64_t* xrow(std::size_t row) { return xs_.data() + row * w_; }
  std::uint64_t* zrow(std::size_t row) { return zs_.data() + row * w_; }
  PauliString row_pauli(std::size_t row) const;
  void rowsum(std::size_t h, std::size_t i);
  void copy_row(std::size_t dst, std::size_t src);
  void clear_row(std::size_t row);

  // Returns the outcome; `forced` < 0 samples with rng.
  struct Collapse {
    int outcome;
    bool random;
  };
  Collapse collapse_z(int q, int forced, std::mt19937_64* rng);

  friend MeasureResult measure_z(StabilizerTableau&, int, std::mt19937_64&);
  friend void force_z(StabilizerTableau&, int, int);

  int n_;
  std::size_t w_;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  std::vector<std::uint8_t> r_;
};

/// Applies element `gate_index` of the canonical two-qubit Clifford
/// enumeration to (q0, q1). Throws InvalidArgument on a bad index or q0 == q1.
void apply_clifford_2q(StabilizerTableau& tab, std::uint32_t gate_index, int q0, int q1);

/// Projective Z measurement with the outcome sampled by the Born rule.
MeasureResult measure_z(StabilizerTableau& tab, int q, std::mt19937_64& rng);

/// Projects onto `outcome`; throws ImpossibleOutcome when it has probability 0.
void force_z(StabilizerTableau& tab, int q, int outcome);

/// Von Neumann entropy (bits) of `region`: rank of the restricted stabilizer
/// matrix minus |region|. Every Renyi entropy equals this for stabilizer states.
double entropy(const StabilizerTableau& tab, const Subsystem& region);

/// S(A) + S(C) - S(A u C) in bits. Throws InvalidArgument if A and C overlap.
double mutual_info(const StabilizerTableau& tab, const Subsystem& a, const Subsystem& c);

}  // namespace mipt
