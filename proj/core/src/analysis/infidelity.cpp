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

#include "mipt/analysis/infidelity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <tuple>

#include "mipt/analysis/mutual_info.hpp"
#include "mipt/circuit/generate.hpp"
#include "mipt/dense/fidelity_bounds.hpp"
#include "mipt/dense/local_operator.hpp"
#include "mipt/dqite/budget.hpp"
#include "mipt/error.hpp"
#include "mipt/parallel.hpp"
#include "mipt/random.hpp"

namespace mipt {
namespace {

constexpr int kTargetQubit = 0;
constexpr double kMinTargetWeight = 1e-6;

std::vector<InfidelityRow> run_trajectory(const InfidelitySweep& sw, double p, int t) {
  CircuitSpec spec;
  spec.n = sw.n;
  spec.layers = sw.layers;
  spec.p = p;
  spec.family = GateFamily::kHaar;
  spec.seed = trajectory_seed(sw.seed, sw.n, sw.layers, p, t);
  const StateVector psi = std::get<StateVector>(generate_and_record(spec).final_state);

  std::mt19937_64 rng = event_rng(spec.seed, StreamPurpose::kTargetOutcome);
  const double p1 = born_probability(psi, kTargetQubit, 1);
  int m = uniform01(rng) < p1 ? 1 : 0;
  if (born_probability(psi, kTargetQubit, m) <= kMinTargetWeight) m = 1 - m;
  const double pm = born_probability(psi, kTargetQubit, m);

  StateVector target = psi;
  project_z(target, kTargetQubit, m);
  const LocalOperator h = outcome_hamiltonian(kTargetQubit, m, sw.n);
  const double max_beta = *std::max_element(sw.betas.begin(), sw.betas.end());

  std::vector<double> exact(sw.betas.size());
  std::vector<double> closed(sw.betas.size());
  const std::array<double, 2> weights{pm, 1.0 - pm};
  const std::array<double, 2> energies{-1.0, 1.0};
  for (std::size_t j = 0; j < sw.betas.size(); ++j) {
    exact[j] = std::max(0.0, 1.0 - fidelity(imaginary_evolve(psi, h, sw.betas[j]), target));
    closed[j] = 1.0 - exact_fidelity_closed_form(weights, energies, sw.betas[j]);
  }

  std::vector<InfidelityRow> rows;
  for (int r : sw.r_values) {
    QiteConfig cfg;
    cfg.beta = max_beta;
    cfg.dtau = sw.dtau;
    cfg.r = r;
    cfg.lambda = sw.lambda;
    cfg.tomography = sw.tomography;
    cfg.shots = sw.shots;
    cfg.tomography_seed = derive_seed(spec.seed, StreamPurpose::kTomography, static_cast<std::uint64_t>(r));
    const PostselectResult res = deterministic_postselect(psi, kTargetQubit, m, cfg, true);
    for (std::size_t j = 0; j < sw.betas.size(); ++j) {
      const int steps = trotter_steps(sw.betas[j], sw.dtau);
      const double f = steps == 0 ? *res.initial_fidelity
                                  : *res.diagnostics[static_cast<std::size_t>(steps - 1)].target_fidelity;
      rows.push_back({sw.n, sw.layers, p, r, sw.betas[j], t, m, pm, std::max(0.0, 1.0 - f), exact[j], closed[j]});
    }
  }
  return rows;
}

}  // namespace

std::vector<InfidelityRow> infidelity_sweep(const InfidelitySweep& sw) {
  if (sw.n > kDenseQubitCap) throw InvalidArgument("n exceeds the dense qubit cap");
  if (sw.p_values.empty() || sw.r_values.empty() || sw.betas.empty()) {
    throw InvalidArgument("infidelity sweep needs nonempty p, r and beta lists");
  }
  if (sw.n_traj < 1) throw InvalidArgument("trajectory count must be >= 1");
  for (double b : sw.betas) {
    if (!(b >= 0.0) || !std::isfinite(b)) throw InvalidArgument("beta values must be finite and >= 0");
  }
  for (int r : sw.r_values) qite_domain(kTargetQubit, r, sw.n);

  const std::size_t per_p = static_cast<std::size_t>(sw.n_traj);
  std::vector<std::vector<InfidelityRow>> chunks(sw.p_values.size() * per_p);
  parallel_for(chunks.size(), sw.jobs, [&](std::size_t i) {
    chunks[i] = run_trajectory(sw, sw.p_values[i / per_p], static_cast<int>(i % per_p));
  });
  std::vector<InfidelityRow> rows;
  for (auto& c : chunks) rows.insert(rows.end(), c.begin(), c.end());
  std::stable_sort(rows.begin(), rows.end(), [&](const InfidelityRow& a, const InfidelityRow& b) {
    const auto pa = std::find(sw.p_values.begin(), sw.p_values.end(), a.p) - sw.p_values.begin();
    const auto pb = std::find(sw.p_values.begin(), sw.p_values.end(), b.p) - sw.p_values.begin();
    const auto ra = std::find(sw.r_values.begin(), sw.r_values.end(), a.r) - sw.r_values.begin();
    const auto rb = std::find(sw.r_values.begin(), sw.r_values.end(), b.r) - sw.r_values.begin();
    return std::tie(pa, ra, a.beta, a.trajectory_id) < std::tie(pb, rb, b.beta, b.trajectory_id);
  });
  return rows;
}

std::vector<InfidelityMean> mean_infidelity(const std::vector<InfidelityRow>& rows) {
  std::vector<std::tuple<double, int, double>> order;
  std::map<std::tuple<double, int, double>, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const auto& row : rows) {
    const auto key = std::make_tuple(row.p, row.r, row.beta);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.first.push_back(row.infidelity);
    it->second.second.push_back(row.exact_infidelity);
  }
  std::vector<InfidelityMean> out;
  for (const auto& key : order) {
    const auto& g = groups.at(key);
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mean_of(g.first), mean_of(g.second)});
  }
  return out;
}

}  // namespace mipt
