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
#include <initializer_list>
#include <vector>

namespace mipt {

/// A set of qubit indices, strictly increasing and within [0, n).
class Subsystem {
 public:
  Subsystem() = default;

  /// Sorts and validates; throws InvalidArgument on duplicates or
  /// out-of-range indices.
  Subsystem(std::vector<int> qubits, int num_qubits);
  Subsystem(std::initializer_list<int> qubits, int num_qubits)
      : Subsystem(std::vector<int>(qubits), num_qubits) {}

  static Subsystem all(int num_qubits);

  const std::vector<int>& qubits() const { return qubits_; }
  std::size_t size() const { return qubits_.size(); }
  bool empty() const { return qubits_.empty(); }
  int operator[](std::size_t i) const { return qubits_[i]; }
  auto begin() const { return qubits_.begin(); }
  auto end() const { return qubits_.end(); }

  bool contains(int q) const;
  bool disjoint(const Subsystem& other) const;
  Subsystem united(const Subsystem& other, int num_qubits) const;

  bool operator==(const Subsystem&) const = default;

 private:
  std::vector<int> qubits_;
};

/// Distance on a ring of n sites: min(|i-j|, n-|i-j|).
int ring_distance(int i, int j, int n);

/// All qubits within ring distance r of `center` (capped at the whole ring).
Subsystem ring_neighborhood(int center, int r, int n);

/// All qubits at ring distance strictly greater than r from `center`.
Subsystem ring_cluster_beyond(int center, int r, int n);

}  // namespace mipt
