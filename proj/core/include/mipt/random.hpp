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
#include <random>

namespace mipt {

/// Independent random streams used when generating and sampling trajectories.
enum class StreamPurpose : std::uint64_t {
  kGateChoice = 1,
  kMeasureDecision = 2,
  kMeasureOutcome = 3,
  kTrajectory = 4,
  kTargetOutcome = 5,
  kTomography = 6,
  kFitRestart = 7,
  kSynthetic = 8,
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based key derivation: hashes (seed, purpose, a, b) into a 64-bit
/// value. Streams keyed by distinct tuples are statistically independent,
/// so the value drawn for one event never depends on iteration order.
std::uint64_t derive_seed(std::uint64_t seed, StreamPurpose purpose, std::uint64_t a = 0,
                          std::uint64_t b = 0);

/// A generator seeded from derive_seed(...).
inline std::mt19937_64 event_rng(std::uint64_t seed, StreamPurpose purpose, std::uint64_t a = 0,
                                 std::uint64_t b = 0) {
  return std::mt19937_64(derive_seed(seed, purpose, a, b));
}

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace mipt
