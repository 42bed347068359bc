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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <string>

#include "mipt/circuit/generate.hpp"
#include "mipt/circuit/record.hpp"
#include "mipt/dense/density.hpp"
#include "mipt/error.hpp"
#include "mipt/stabilizer/clifford2q.hpp"
#include "mipt/stabilizer/tableau.hpp"

namespace mipt {
namespace {

CircuitSpec make_spec(int n, int layers, double p, GateFamily family, std::uint64_t seed) {
  CircuitSpec s;
  s.n = n;
  s.layers = layers;
  s.p = p;
  s.family = family;
  s.seed = seed;
  return s;
}

TEST(CircuitSpec, ValidationRejectsBadFields) {
  EXPECT_NO_THROW(make_spec(4, 1, 0.0, GateFamily::kClifford, 0).validate());
  EXPECT_THROW(make_spec(5, 1, 0.1, GateFamily::kClifford, 0).validate(), InvalidArgument);
  EXPECT_THROW(make_spec(2, 1, 0.1, GateFamily::kClifford, 0).validate(), InvalidArgument);
  EXPECT_THROW(make_spec(4, 0, 0.1, GateFamily::kClifford, 0).validate(), InvalidArgument);
  EXPECT_THROW(make_spec(4, 2, -0.1, GateFamily::kClifford, 0).validate(), InvalidArgument);
  EXPECT_THROW(make_spec(4, 2, 1.5, GateFamily::kClifford, 0).validate(), InvalidArgument);
  auto s = make_spec(4, 2, 0.1, GateFamily::kClifford, 0);
  s.initial_bitstring = "01";
  EXPECT_THROW(s.validate(), InvalidArgument);
  s.initial_bitstring = "01a1";
  EXPECT_THROW(s.validate(), InvalidArgument);
  s.initial_bitstring = "0101";
  EXPECT_NO_THROW(s.validate());
}

TEST(CircuitSpec, GateFamilyNames) {
  EXPECT_EQ(parse_gate_family(to_string(GateFamily::kHaar)), GateFamily::kHaar);
  EXPECT_EQ(parse_gate_family(to_string(GateFamily::kClifford)), GateFamily::kClifford);
  EXPECT_THROW(parse_gate_family("matchgate"), InvalidArgument);
}

TEST(Brickwork, SublayerPairsCoverRingWithWrapGate) {
  for (int n : {4, 6, 10}) {
    const auto even = sublayer_pairs(n, Sublayer::kEven);
    const auto odd = sublayer_pairs(n, Sublayer::kOdd);
    ASSERT_EQ(even.size(), static_cast<std::size_t>(n / 2));
    ASSERT_EQ(odd.size(), static_cast<std::size_t>(n / 2));
    std::set<int> seen_even, seen_odd;
    for (std::size_t k = 0; k < even.size(); ++k) {
      EXPECT_EQ(even[k].first, static_cast<int>(2 * k));
      EXPECT_EQ(even[k].second, static_cast<int>(2 * k + 1));
      EXPECT_EQ(odd[k].first, static_cast<int>(2 * k + 1));
      EXPECT_EQ(odd[k].second, static_cast<int>((2 * k + 2) % n));
      seen_even.insert({even[k].first, even[k].second});
      seen_odd.insert({odd[k].first, odd[k].second});
    }
    EXPECT_EQ(seen_even.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(seen_odd.size(), static_cast<std::size_t>(n));
    EXPECT_EQ(odd.back(), std::make_pair(n - 1, 0));
  }
}

TEST(Generate, NoMeasurementsAtZeroRate) {
  for (auto family : {GateFamily::kClifford, GateFamily::kHaar}) {
    const auto rec = generate_and_record(make_spec(6, 5, 0.0, family, 3)).record;
    EXPECT_TRUE(rec.measurements.empty());
    EXPECT_EQ(rec.gates.size(), 6U * 5U);
  }
}

TEST(Generate, FullRateMeasuresEveryQubitInEveryGap) {
  const auto rec = generate_and_record(make_spec(4, 3, 1.0, GateFamily::kClifford, 9)).record;
  EXPECT_EQ(rec.measurements.size(), 8U);
  const auto haar = generate_and_record(make_spec(4, 3, 1.0, GateFamily::kHaar, 9)).record;
  EXPECT_EQ(haar.measurements.size(), 8U);
}

TEST(Generate, EventOrderingIsValidInterleaving) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto rec = generate_and_record(make_spec(8, 6, 0.4, GateFamily::kClifford, seed)).record;
    EXPECT_EQ(rec.validation_error(), "");
    for (std::size_t g = 0; g < rec.gates.size(); ++g) {
      const auto& ev = rec.gates[g];
      EXPECT_EQ(ev.layer, static_cast<int>(g / 8));
      EXPECT_EQ(ev.sublayer, (g % 8) < 4 ? Sublayer::kEven : Sublayer::kOdd);
    }
    for (std::size_t k = 1; k < rec.measurements.size(); ++k) {
      const auto& a = rec.measurements[k - 1];
      const auto& b = rec.measurements[k];
      EXPECT_TRUE(a.layer_gap < b.layer_gap || (a.layer_gap == b.layer_gap && a.qubit < b.qubit));
    }
    for (const auto& m : rec.measurements) {
      EXPECT_GE(m.layer_gap, 0);
      EXPECT_LE(m.layer_gap, 4);
    }
  }
}

TEST(Generate, SameSeedReproducesRecordByteForByte) {
  const auto spec = make_spec(16, 16, 0.3, GateFamily::kClifford, 0xC0FFEEULL);
  const std::string a = serialize(generate_and_record(spec).record);
  const std::string b = serialize(generate_and_record(spec).record);
  EXPECT_EQ(a, b);
  const std::string c = serialize(generate_and_record(make_spec(16, 16, 0.3, GateFamily::kClifford, 1)).record);
  EXPECT_NE(a, c);
}

TEST(Generate, MeasurementCountIsBinomial) {
  const int n = 4, layers = 3;
  const double p = 0.3;
  const int seeds = 10000;
  const double trials = n * (layers - 1);
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const double m = static_cast<double>(
        generate_and_record(make_spec(n, layers, p, GateFamily::kClifford, static_cast<std::uint64_t>(s)))
            .record.measurements.size());
    sum += m;
    sum_sq += m * m;
  }
  const double mean = sum / seeds;
  const double var = sum_sq / seeds - mean * mean;
  const double expected_var = trials * p * (1 - p);
  EXPECT_NEAR(mean, trials * p, 4.0 * std::sqrt(expected_var / seeds));
  EXPECT_NEAR(var, expected_var, 0.1 * expected_var);
}

TEST(Generate, CliffordBornProbabilitiesAreHalfOrOne) {
  const auto rec = generate_and_record(make_spec(10, 8, 0.5, GateFamily::kClifford, 4)).record;
  ASSERT_FALSE(rec.measurements.empty());
  for (const auto& m : rec.measurements) EXPECT_TRUE(m.born_p == 0.5 || m.born_p == 1.0);
}

TEST(Generate, HaarGatesAreUnitaryAndDenseCapEnforced) {
  const auto rec = generate_and_record(make_spec(6, 3, 0.2, GateFamily::kHaar, 5)).record;
  for (const auto& g : rec.gates) EXPECT_TRUE(is_unitary(std::get<Eigen::Matrix4cd>(g.gate), 1e-12));
  for (const auto& m : rec.measurements) {
    EXPECT_GT(m.born_p, 0.0);
    EXPECT_LE(m.born_p, 1.0);
  }
  EXPECT_THROW(generate_and_record(make_spec(kDenseQubitCap + 2, 1, 0.0, GateFamily::kHaar, 0)), InvalidArgument);
}

TEST(Generate, InitialBitstringIsHonoured) {
  auto spec = make_spec(4, 1, 0.0, GateFamily::kHaar, 2);
  spec.initial_bitstring = "1000";
  const auto rec = generate_and_record(spec).record;
  auto start = std::get<StateVector>(initial_state(spec));
  EXPECT_EQ(std::abs(start[1]), 1.0);
  for (const auto& g : rec.gates) apply_2q_unitary(start, gate_matrix(g), g.q0, g.q1);
  EXPECT_NEAR(fidelity(start, std::get<StateVector>(replay_reference(rec))), 1.0, 1e-12);
}

TEST(Replay, CliffordReferenceMatchesRecordingRun) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rec = generate_and_record(make_spec(12, 10, 0.3, GateFamily::kClifford, seed));
    const auto replayed = replay_reference(rec.record);
    const auto& a = std::get<StabilizerTableau>(rec.final_state);
    const auto& b = std::get<StabilizerTableau>(replayed);
    for (int q = 0; q <= 12; q += 3) {
      for (int len = 1; len <= 6; ++len) {
        std::vector<int> region;
        for (int k = 0; k < len; ++k) region.push_back((q + k) % 12);
        const Subsystem sub(region, 12);
        EXPECT_EQ(entropy(a, sub), entropy(b, sub));
      }
    }
    for (int i = 0; i < 12; ++i) EXPECT_EQ(a.stabilizer(i), b.stabilizer(i));
  }
}

TEST(Replay, HaarReferenceHasUnitFidelityWithRecordingRun) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto rec = generate_and_record(make_spec(10, 8, 0.3, GateFamily::kHaar, seed));
    const auto replayed = replay_reference(rec.record);
    EXPECT_NEAR(fidelity(std::get<StateVector>(replayed), std::get<StateVector>(rec.final_state)), 1.0, 1e-12);
  }
}

TEST(Replay, WithoutMeasurementsMatchesDirectUnitaryEvolution) {
  const auto rec = generate_and_record(make_spec(6, 4, 0.0, GateFamily::kHaar, 12)).record;
  StateVector direct(6);
  for (const auto& g : rec.gates) apply_2q_unitary(direct, std::get<Eigen::Matrix4cd>(g.gate), g.q0, g.q1);
  EXPECT_NEAR(fidelity(direct, std::get<StateVector>(replay_reference(rec))), 1.0, 1e-13);
}

TEST(Replay, DenseReplayOfCliffordRecordAgreesWithTableau) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto rec = generate_and_record(make_spec(8, 8, 0.3, GateFamily::kClifford, seed));
    const StateVector dense = replay_dense(rec.record);
    const auto& tab = std::get<StabilizerTableau>(rec.final_state);
    for (int len = 1; len <= 4; ++len) {
      std::vector<int> region;
      for (int k = 0; k < len; ++k) region.push_back(k);
      const Subsystem sub(region, 8);
      EXPECT_NEAR(entanglement_entropy(dense, sub), entropy(tab, sub), 1e-9);
    }
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(pauli_expectation(dense, tab.stabilizer(i)), 1.0, 1e-9);
  }
}

TEST(Replay, TamperedDeterministicOutcomeIsImpossible) {
  bool tested = false;
  for (std::uint64_t seed = 0; seed < 50 && !tested; ++seed) {
    auto rec = generate_and_record(make_spec(4, 3, 1.0, GateFamily::kClifford, seed)).record;
    for (auto& m : rec.measurements) {
      if (m.born_p != 1.0) continue;
      m.outcome ^= 1;
      EXPECT_THROW(replay_reference(rec), ImpossibleOutcome);
      tested = true;
      break;
    }
  }
  EXPECT_TRUE(tested);

  // A Haar record whose gates are all the identity keeps |0000>.
  TrajectoryRecord rec;
  rec.spec = make_spec(4, 2, 0.5, GateFamily::kHaar, 0);
  for (int layer = 0; layer < 2; ++layer) {
    for (Sublayer sub : {Sublayer::kEven, Sublayer::kOdd}) {
      for (auto [a, b] : sublayer_pairs(4, sub)) {
        GateEvent ev;
        ev.layer = layer;
        ev.sublayer = sub;
        ev.q0 = a;
        ev.q1 = b;
        ev.gate = Eigen::Matrix4cd(Eigen::Matrix4cd::Identity());
        rec.gates.push_back(ev);
      }
    }
  }
  rec.measurements.push_back({0, 2, 1, 1.0});
  EXPECT_THROW(replay_reference(rec), ImpossibleOutcome);
}

TEST(Serialization, RoundTripIsIdentity) {
  for (auto family : {GateFamily::kClifford, GateFamily::kHaar}) {
    auto spec = make_spec(8, 5, 0.4, family, 77);
    spec.initial_bitstring = "01100101";
    const auto rec = generate_and_record(spec).record;
    const std::string text = serialize(rec);
    const TrajectoryRecord back = deserialize(text);
    EXPECT_EQ(back, rec);
    EXPECT_EQ(serialize(back), text);
  }
}

TEST(Serialization, HaarMatricesAreBitExact) {
  const auto rec = generate_and_record(make_spec(6, 4, 0.3, GateFamily::kHaar, 31)).record;
  const auto back = deserialize(serialize(rec));
  ASSERT_EQ(back.gates.size(), rec.gates.size());
  for (std::size_t g = 0; g < rec.gates.size(); ++g) {
    const auto& a = std::get<Eigen::Matrix4cd>(rec.gates[g].gate);
    const auto& b = std::get<Eigen::Matrix4cd>(back.gates[g].gate);
    for (int i = 0; i < 16; ++i) {
      EXPECT_EQ(a.data()[i].real(), b.data()[i].real());
      EXPECT_EQ(a.data()[i].imag(), b.data()[i].imag());
    }
  }
  for (std::size_t k = 0; k < rec.measurements.size(); ++k) {
    EXPECT_EQ(rec.measurements[k].born_p, back.measurements[k].born_p);
  }
  const auto s1 = std::get<StateVector>(replay_reference(rec));
  const auto s2 = std::get<StateVector>(replay_reference(back));
  EXPECT_NEAR(fidelity(s1, s2), 1.0, 1e-12);
}

TEST(Serialization, TruncatedPayloadIsMalformed) {
  const std::string text = serialize(generate_and_record(make_spec(4, 3, 0.5, GateFamily::kClifford, 1)).record);
  EXPECT_THROW(deserialize(text.substr(0, text.size() / 2)), MalformedInput);
  EXPECT_THROW(deserialize(""), MalformedInput);
  EXPECT_THROW(deserialize("[1,2,3]"), MalformedInput);
}

TEST(Serialization, VersionMismatchIsReported) {
  std::string text = serialize(generate_and_record(make_spec(4, 2, 0.5, GateFamily::kClifford, 1)).record);
  const auto pos = text.find("\"format_version\":1");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, std::string("\"format_version\":1").size(), "\"format_version\":2");
  EXPECT_THROW(deserialize(text), VersionMismatch);
}

TEST(Serialization, StructurallyInvalidRecordsAreMalformed) {
  const auto good = generate_and_record(make_spec(4, 3, 1.0, GateFamily::kClifford, 2)).record;
  {
    auto rec = good;
    rec.measurements[0].born_p = 0.0;
    EXPECT_NE(rec.validation_error(), "");
    EXPECT_THROW(deserialize(serialize(rec)), MalformedInput);
  }
  {
    auto rec = good;
    rec.measurements[0].outcome = 2;
    EXPECT_THROW(deserialize(serialize(rec)), MalformedInput);
  }
  {
    auto rec = good;
    rec.gates.pop_back();
    EXPECT_THROW(deserialize(serialize(rec)), MalformedInput);
  }
  {
    auto rec = good;
    std::swap(rec.gates[0].q0, rec.gates[0].q1);
    EXPECT_NE(rec.validation_error(), "");
  }
  {
    auto rec = good;
    rec.gates[0].gate = std::uint32_t{Clifford2QGroup::kOrder};
    EXPECT_THROW(deserialize(serialize(rec)), MalformedInput);
  }
  {
    auto rec = good;
    rec.measurements.back().layer_gap = rec.spec.layers - 1;
    EXPECT_THROW(deserialize(serialize(rec)), MalformedInput);
  }
  {
    auto rec = good;
    std::swap(rec.measurements[0], rec.measurements[1]);
    EXPECT_NE(rec.validation_error(), "");
  }
}

}  // namespace
}  // namespace mipt
