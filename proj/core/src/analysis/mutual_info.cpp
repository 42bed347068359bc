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

#include "mipt/analysis/mutual_info.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "mipt/circuit/generate.hpp"
#include "mipt/error.hpp"
#include "mipt/parallel.hpp"
#include "mipt/random.hpp"
#include "mipt/stabilizer/tableau.hpp"

namespace mipt {
namespace {

constexpr double kMedianEfficiency = 1.2533;

void check_geometry(int n, const std::vector<int>& r_values) {
  if (r_values.empty()) throw InvalidArgument("r list is empty");
  for (int r : r_values) {
    if (r < 0 || 2 * r >= n) {
      throw InvalidArgument("r = " + std::to_string(r) + " must satisfy 0 <= r < n/2 for n = " + std::to_string(n));
    }
  }
}

}  // namespace

std::string to_string(Statistic stat) { return stat == Statistic::kMedian ? "median" : "mean"; }

Statistic parse_statistic(const std::string& text) {
  if (text == "median") return Statistic::kMedian;
  if (text == "mean") return Statistic::kMean;
  throw InvalidArgument("unknown statistic '" + text + "' (expected median or mean)");
}

double mean_of(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("mean of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  double comp = 0.0;
  for (double v : sorted) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(values.size());
}

double median_of(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t h = sorted.size() / 2;
  return sorted.size() % 2 == 1 ? sorted[h] : 0.5 * (sorted[h - 1] + sorted[h]);
}

Estimate aggregate(std::span<const double> values, Statistic stat) {
  const double mu = mean_of(values);
  const auto count = static_cast<double>(values.size());
  double sigma = 0.0;
  if (values.size() > 1) {
    std::vector<double> sq;
    sq.reserve(values.size());
    for (double v : values) sq.push_back((v - mu) * (v - mu));
    sigma = std::sqrt(mean_of(sq) * count / (count - 1.0));
  }
  const double se = sigma / std::sqrt(count);
  if (stat == Statistic::kMean) return {mu, se};
  return {median_of(values), kMedianEfficiency * se};
}

std::uint64_t trajectory_seed(std::uint64_t master_seed, int n, int layers, double p, int t) {
  const std::uint64_t point = derive_seed(master_seed, StreamPurpose::kTrajectory,
                                          (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(layers),
                                          std::bit_cast<std::uint64_t>(p));
  return derive_seed(point, StreamPurpose::kTrajectory, static_cast<std::uint64_t>(t));
}

std::vector<double> trajectory_cluster_mi(const CircuitSpec& spec, const std::vector<int>& r_values) {
  check_geometry(spec.n, r_values);
  if (spec.family != GateFamily::kClifford) throw InvalidArgument("cluster sweeps use the Clifford family");
  const Recording rec = generate_and_record(spec);
  const auto& tab = std::get<StabilizerTableau>(rec.final_state);
  const Subsystem a({0}, spec.n);
  std::vector<double> out;
  out.reserve(r_values.size());
  for (int r : r_values) out.push_back(mutual_info(tab, a, ring_cluster_beyond(0, r, spec.n)));
  return out;
}

std::vector<std::vector<double>> cluster_mi_samples(int n, int layers, double p, const std::vector<int>& r_values,
                                                    int n_traj, std::uint64_t master_seed, int jobs) {
  check_geometry(n, r_values);
  if (n_traj < 1) throw InvalidArgument("trajectory count must be >= 1");
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(n_traj));
  parallel_for(samples.size(), jobs, [&](std::size_t t) {
    CircuitSpec spec;
    spec.n = n;
    spec.layers = layers;
    spec.p = p;
    spec.family = GateFamily::kClifford;
    spec.seed = trajectory_seed(master_seed, n, layers, p, static_cast<int>(t));
    samples[t] = trajectory_cluster_mi(spec, r_values);
  });
  return samples;
}

std::vector<MutualInfoCurve> sweep_mutual_info(const MutualInfoSweep& sweep) {
  check_geometry(sweep.n, sweep.r_values);
  std::vector<MutualInfoCurve> curves;
  for (double p : sweep.p_values) {
    const auto samples =
        cluster_mi_samples(sweep.n, sweep.layers, p, sweep.r_values, sweep.n_traj, sweep.seed, sweep.jobs);
    MutualInfoCurve c{sweep.n, sweep.layers, p, sweep.r_values, sweep.stat, {}, {}, sweep.n_traj};
    for (std::size_t j = 0; j < sweep.r_values.size(); ++j) {
      std::vector<double> column;
      column.reserve(samples.size());
      for (const auto& s : samples) column.push_back(s[j]);
      const Estimate e = aggregate(column, sweep.stat);
      c.values.push_back(e.value);
      c.stderrs.push_back(e.standard_error);
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

}  // namespace mipt
