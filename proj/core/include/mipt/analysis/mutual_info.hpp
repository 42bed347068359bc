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
#include <span>
#include <string>
#include <vector>

#include "mipt/circuit/record.hpp"

namespace mipt {

enum class Statistic { kMedian, kMean };

std::string to_string(Statistic stat);
Statistic parse_statistic(const std::string& text);

/// Ensemble estimate with its standard error.
struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

double mean_of(std::span<const double> values);
double median_of(std::span<const double> values);

/// Mean with sigma / sqrt(N), or median with 1.2533 sigma / sqrt(N).
Estimate aggregate(std::span<const double> values, Statistic stat);

struct MutualInfoCurve {
  int n = 0;
  int layers = 0;
  double p = 0.0;
  std::vector<int> r_values;
  Statistic stat = Statistic::kMedian;
  std::vector<double> values;
  std::vector<double> stderrs;
  int n_traj = 0;
};

struct MutualInfoSweep {
  int n = 64;
  int layers = 64;
  std::vector<double> p_values;
  std::vector<int> r_values;
  int n_traj = 200;
  Statistic stat = Statistic::kMedian;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Seed of trajectory t at point (n, layers, p) under `master_seed`.
std::uint64_t trajectory_seed(std::uint64_t master_seed, int n, int layers, double p, int t);

/// Cluster correlation I(A, C)(r) in bits with A = {0} and C the qubits at
/// ring distance > r from qubit 0, on the final state of one Clifford trajectory.
std::vector<double> trajectory_cluster_mi(const CircuitSpec& spec, const std::vector<int>& r_values);

/// Per-trajectory samples, indexed [trajectory][r].
std::vector<std::vector<double>> cluster_mi_samples(int n, int layers, double p, const std::vector<int>& r_values,
                                                    int n_traj, std::uint64_t master_seed, int jobs);

/// One curve per p value.
std::vector<MutualInfoCurve> sweep_mutual_info(const MutualInfoSweep& sweep);

}  // namespace mipt
