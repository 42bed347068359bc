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

#include <complex>
#include <string>

#include <json.hpp>

#include "mipt/circuit/record.hpp"
#include "mipt/error.hpp"

namespace mipt {

using nlohmann::json;

std::string serialize(const TrajectoryRecord& record) {
  json j;
  j["format_version"] = record.format_version;
  j["spec"] = {{"n", record.spec.n},
               {"L", record.spec.layers},
               {"p", record.spec.p},
               {"gate_family", to_string(record.spec.family)},
               {"seed", record.spec.seed},
               {"initial_bitstring", record.spec.initial_bitstring}};
  json gates = json::array();
  for (const auto& g : record.gates) {
    json e = {{"layer", g.layer},
              {"sublayer", g.sublayer == Sublayer::kEven ? "even" : "odd"},
              {"qubits", {g.q0, g.q1}}};
    if (const auto* idx = std::get_if<std::uint32_t>(&g.gate)) {
      e["clifford"] = *idx;
    } else {
      const auto& m = std::get<Eigen::Matrix4cd>(g.gate);
      json rows = json::array();
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) rows.push_back({m(r, c).real(), m(r, c).imag()});
      e["matrix"] = std::move(rows);
    }
    gates.push_back(std::move(e));
  }
  j["gates"] = std::move(gates);
  json meas = json::array();
  for (const auto& m : record.measurements) {
    meas.push_back({{"layer_gap", m.layer_gap}, {"qubit", m.qubit}, {"outcome", m.outcome}, {"born_p", m.born_p}});
  }
  j["measurements"] = std::move(meas);
  return j.dump();
}

TrajectoryRecord deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("trajectory record: ") + e.what());
  }
  TrajectoryRecord rec;
  try {
    if (!j.is_object() || !j.contains("format_version")) throw MalformedInput("trajectory record: missing format_version");
    rec.format_version = j.at("format_version").get<int>();
    if (rec.format_version != TrajectoryRecord::kFormatVersion) {
      throw VersionMismatch("trajectory record version " + std::to_string(rec.format_version) +
                            " is not supported (expected " + std::to_string(TrajectoryRecord::kFormatVersion) + ")");
    }
    const json& s = j.at("spec");
    rec.spec.n = s.at("n").get<int>();
    rec.spec.layers = s.at("L").get<int>();
    rec.spec.p = s.at("p").get<double>();
    rec.spec.family = parse_gate_family(s.at("gate_family").get<std::string>());
    rec.spec.seed = s.at("seed").get<std::uint64_t>();
    rec.spec.initial_bitstring = s.value("initial_bitstring", std::string());
    for (const auto& e : j.at("gates")) {
      GateEvent g;
      g.layer = e.at("layer").get<int>();
      const std::string sub = e.at("sublayer").get<std::string>();
      if (sub != "even" && sub != "odd") throw MalformedInput("trajectory record: bad sublayer");
      g.sublayer = sub == "even" ? Sublayer::kEven : Sublayer::kOdd;
      const auto& q = e.at("qubits");
      if (!q.is_array() || q.size() != 2) throw MalformedInput("trajectory record: qubits must be a pair");
      g.q0 = q[0].get<int>();
      g.q1 = q[1].get<int>();
      if (e.contains("clifford")) {
        g.gate = e.at("clifford").get<std::uint32_t>();
      } else {
        const auto& rows = e.at("matrix");
        if (!rows.is_array() || rows.size() != 16) throw MalformedInput("trajectory record: matrix needs 16 entries");
        Eigen::Matrix4cd m;
        for (int k = 0; k < 16; ++k) {
          const auto& pair = rows[static_cast<std::size_t>(k)];
          if (!pair.is_array() || pair.size() != 2) throw MalformedInput("trajectory record: bad matrix entry");
          m(k / 4, k % 4) = std::complex<double>(pair[0].get<double>(), pair[1].get<double>());
        }
        g.gate = m;
      }
      rec.gates.push_back(std::move(g));
    }
    for (const auto& e : j.at("measurements")) {
      MeasurementEvent m;
      m.layer_gap = e.at("layer_gap").get<int>();
      m.qubit = e.at("qubit").get<int>();
      m.outcome = e.at("outcome").get<int>();
      m.born_p = e.at("born_p").get<double>();
      rec.measurements.push_back(m);
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("trajectory record: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw MalformedInput(std::string("trajectory record: ") + e.what());
  }
  const std::string err = rec.validation_error();
  if (!err.empty()) throw MalformedInput("trajectory record: " + err);
  return rec;
}

}  // namespace mipt
