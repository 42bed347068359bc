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

#include <string>

#include "mipt/circuit/record.hpp"
#include "mipt/error.hpp"
#include "mipt/stabilizer/clifford2q.hpp"

namespace mipt {

std::string to_string(GateFamily family) { return family == GateFamily::kClifford ? "clifford" : "haar"; }

GateFamily parse_gate_family(const std::string& text) {
  if (text == "clifford") return GateFamily::kClifford;
  if (text == "haar") return GateFamily::kHaar;
  throw InvalidArgument("unknown gate family '" + text + "'");
}

void CircuitSpec::validate() const {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("n must be even and >= 4, got " + std::to_string(n));
  if (layers < 1) throw InvalidArgument("layer count must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("measurement rate must lie in [0, 1]");
  if (!initial_bitstring.empty()) {
    if (static_cast<int>(initial_bitstring.size()) != n) {
      throw InvalidArgument("initial bitstring length must equal n");
    }
    for (char c : initial_bitstring) {
      if (c != '0' && c != '1') throw InvalidArgument("initial bitstring must contain only 0 and 1");
    }
  }
}

std::vector<std::pair<int, int>> sublayer_pairs(int n, Sublayer sublayer) {
  std::vector<std::pair<int, int>> pairs;
  const int start = sublayer == Sublayer::kEven ? 0 : 1;
  for (int i = start; i < n; i += 2) pairs.emplace_back(i, (i + 1) % n);
  return pairs;
}

bool GateEvent::operator==(const GateEvent& other) const {
  if (layer != other.layer || sublayer != other.sublayer || q0 != other.q0 || q1 != other.q1) return false;
  if (gate.index() != other.gate.index()) return false;
  if (const auto* c = std::get_if<std::uint32_t>(&gate)) return *c == std::get<std::uint32_t>(other.gate);
  return std::get<Eigen::Matrix4cd>(gate) == std::get<Eigen::Matrix4cd>(other.gate);
}

std::string TrajectoryRecord::validation_error() const {
  if (format_version != kFormatVersion) return "unsupported format_version";
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  const std::size_t per_layer = static_cast<std::size_t>(spec.n);
  if (gates.size() != per_layer * static_cast<std::size_t>(spec.layers)) return "wrong gate count";
  std::size_t g = 0;
  for (int layer = 0; layer < spec.layers; ++layer) {
    for (Sublayer sub : {Sublayer::kEven, Sublayer::kOdd}) {
      for (auto [a, b] : sublayer_pairs(spec.n, sub)) {
        const GateEvent& ev = gates[g++];
        if (ev.layer != layer || ev.sublayer != sub || ev.q0 != a || ev.q1 != b) {
          return "gate " + std::to_string(g - 1) + " breaks the brickwork pattern";
        }
        const bool clifford = std::holds_alternative<std::uint32_t>(ev.gate);
        if (clifford != (spec.family == GateFamily::kClifford)) return "gate kind does not match family";
        if (clifford && std::get<std::uint32_t>(ev.gate) >= Clifford2QGroup::kOrder) {
          return "Clifford index out of range";
        }
      }
    }
  }
  int last_gap = -1, last_qubit = -1;
  for (const auto& m : measurements) {
    if (m.layer_gap < 0 || m.layer_gap > spec.layers - 2) return "measurement outside the layer gaps";
    if (m.qubit < 0 || m.qubit >= spec.n) return "measurement qubit out of range";
    if (m.outcome != 0 && m.outcome != 1) return "measurement outcome must be 0 or 1";
    if (!(m.born_p > 0.0 && m.born_p <= 1.0)) return "born_p must lie in (0, 1]";
    if (m.layer_gap < last_gap || (m.layer_gap == last_gap && m.qubit <= last_qubit)) {
      return "measurements out of order";
    }
    last_gap = m.layer_gap;
    last_qubit = m.qubit;
  }
  return {};
}

}  // namespace mipt
