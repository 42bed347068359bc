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

#include "mipt/subsystem.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "mipt/error.hpp"

namespace mipt {

Subsystem::Subsystem(std::vector<int> qubits, int num_qubits) : qubits_(std::move(qubits)) {
  std::sort(qubits_.begin(), qubits_.end());
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (qubits_[i] < 0 || qubits_[i] >= num_qubits) {
      throw InvalidArgument("qubit index " + std::to_string(qubits_[i]) + " out of range for n=" +
                            std::to_string(num_qubits));
    }
    if (i > 0 && qubits_[i] == qubits_[i - 1]) {
      throw InvalidArgument("duplicate qubit index " + std::to_string(qubits_[i]));
    }
  }
}

Subsystem Subsystem::all(int num_qubits) {
  std::vector<int> q(static_cast<std::size_t>(num_qubits));
  for (int i = 0; i < num_qubits; ++i) q[static_cast<std::size_t>(i)] = i;
  return Subsystem(std::move(q), num_qubits);
}

bool Subsystem::contains(int q) const { return std::binary_search(qubits_.begin(), qubits_.end(), q); }

bool Subsystem::disjoint(const Subsystem& other) const {
  auto a = qubits_.begin();
  auto b = other.qubits_.begin();
  while (a != qubits_.end() && b != other.qubits_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Subsystem Subsystem::united(const Subsystem& other, int num_qubits) const {
  std::vector<int> merged;
  std::set_union(qubits_.begin(), qubits_.end(), other.qubits_.begin(), other.qubits_.end(),
                 std::back_inserter(merged));
  return Subsystem(std::move(merged), num_qubits);
}

int ring_distance(int i, int j, int n) {
  int d = std::abs(i - j) % n;
  return std::min(d, n - d);
}

Subsystem ring_neighborhood(int center, int r, int n) {
  std::vector<int> q;
  for (int j = 0; j < n; ++j) {
    if (ring_distance(center, j, n) <= r) q.push_back(j);
  }
  return Subsystem(std::move(q), n);
}

Subsystem ring_cluster_beyond(int center, int r, int n) {
  std::vector<int> q;
  for (int j = 0; j < n; ++j) {
    if (ring_distance(center, j, n) > r) q.push_back(j);
  }
  return Subsystem(std::move(q), n);
}

}  // namespace mipt
