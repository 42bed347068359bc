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
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace mipt {

enum class GateFamily { kClifford, kHaar };

std::string to_string(GateFamily family);
GateFamily parse_gate_family(const std::string& text);

/// Brickwork measured circuit on a ring of n qubits.
struct CircuitSpec {
  int n = 4;
  int layers = 1;
  double p = 0.0;
  GateFamily family = GateFamily::kClifford;
  std::uint64_t seed = 0;
  /// Computational-basis initial state, character q for qubit q. Empty
  /// means |0...0>.
  std::string initial_bitstring;

  /// Throws InvalidArgument unless n is even and >= 4, layers >= 1,
  /// 0 <= p <= 1 and the bitstring (if any) has length n over {0,1}.
  void validate() const;
  bool operator==(const CircuitSpec&) const = default;
};

enum class Sublayer { kEven = 0, kOdd = 1 };

/// Qubit pairs of one sublayer: even (0,1),(2,3),...; odd (1,2),...,(n-1,0).
std::vector<std::pair<int, int>> sublayer_pairs(int n, Sublayer sublayer);

struct GateEvent {
  int layer = 0;
  Sublayer sublayer = Sublayer::kEven;
  int q0 = 0;
  int q1 = 1;
  /// Clifford enumeration index or a 4x4 unitary.
  std::variant<std::uint32_t, Eigen::Matrix4cd> gate;

  bool operator==(const GateEvent& other) const;
};

/// A Z measurement between layer `layer_gap` and layer `layer_gap + 1`.
struct MeasurementEvent {
  int layer_gap = 0;
  int qubit = 0;
  int outcome = 0;
  double born_p = 1.0;
  bool operator==(const MeasurementEvent&) const = default;
};

/// A witnessed trajectory: every gate and every measurement outcome.
struct TrajectoryRecord {
  static constexpr int kFormatVersion = 1;

  CircuitSpec spec;
  std::vector<GateEvent> gates;
  std::vector<MeasurementEvent> measurements;
  int format_version = kFormatVersion;

  /// Checks the brickwork pattern, gate kinds against the family, event
  /// ordering (layer k gates, then gap k measurements, then layer k+1) and
  /// measurement fields. Returns an empty string when valid, else a reason.
  std::string validation_error() const;
  bool operator==(const TrajectoryRecord&) const = default;
};

/// JSON document ("format_version", "spec", "gates", "measurements"); Haar
/// matrices stored row-major as [re, im] pairs at full double precision.
std::string serialize(const TrajectoryRecord& record);

/// Throws VersionMismatch or MalformedInput.
TrajectoryRecord deserialize(const std::string& text);

}  // namespace mipt
