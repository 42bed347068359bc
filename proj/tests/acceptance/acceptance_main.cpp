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

// Acceptance checks for the simulator, the DQITE engine and the analysis
// layer. Prints one PASS or FAIL line per criterion and exits nonzero if any
// criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mipt/analysis/collapse.hpp"
#include "mipt/analysis/failure.hpp"
#include "mipt/analysis/gadget.hpp"
#include "mipt/analysis/infidelity.hpp"
#include "mipt/analysis/mutual_info.hpp"
#include "mipt/circuit/generate.hpp"
#include "mipt/dense/density.hpp"
#include "mipt/dense/fidelity_bounds.hpp"
#include "mipt/dense/local_operator.hpp"
#include "mipt/dense/state_vector.hpp"
#include "mipt/dqite/budget.hpp"
#include "mipt/dqite/qite.hpp"
#include "mipt/dqite/trajectory.hpp"
#include "mipt/stabilizer/tableau.hpp"

namespace mipt::acceptance {
namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int worker_count() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// ---- 1: fidelity bound for +-sigma_Z ---------------------------------------

Verdict fidelity_bound_on_random_states() {
  constexpr int kQubits = 6;
  std::mt19937_64 rng(101);
  std::normal_distribution<double> gauss;
  int states = 0;
  int bound_violations = 0;
  double worst_closed_form = 0.0;
  while (states < 100) {
    Eigen::VectorXcd amps(1 << kQubits);
    for (Eigen::Index i = 0; i < amps.size(); ++i) amps[i] = {gauss(rng), gauss(rng)};
    const StateVector psi = StateVector::from_amplitudes(amps);
    const int outcome = states % 2;
    const double p = born_probability(psi, 0, outcome);
    if (p < 0.05) continue;
    ++states;
    StateVector target = psi;
    project_z(target, 0, outcome);
    const LocalOperator h = outcome_hamiltonian(0, outcome, kQubits);
    const std::array<double, 2> weights{p, 1.0 - p};
    const std::array<double, 2> energies{-1.0, 1.0};
    for (int k = 0; k <= 45; ++k) {
      const double beta = 0.5 + 0.1 * k;
      const double f = fidelity(imaginary_evolve(psi, h, beta), target);
      if (f < fidelity_bound(p, beta, kOutcomeGap) - 1e-14) ++bound_violations;
      worst_closed_form = std::max(worst_closed_form, std::abs(f - exact_fidelity_closed_form(weights, energies, beta)));
    }
  }
  return {bound_violations == 0 && worst_closed_form <= 1e-12,
          "bound violations " + std::to_string(bound_violations) + ", max |F - closed form| " + fmt(worst_closed_form)};
}

// ---- 2: stabilizer vs dense ------------------------------------------------

Verdict stabilizer_matches_dense() {
  constexpr int kQubits = 8;
  double worst_entropy = 0.0;
  double worst_mi = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CircuitSpec spec;
    spec.n = kQubits;
    spec.layers = 8;
    spec.p = 0.3;
    spec.family = GateFamily::kClifford;
    spec.seed = seed;
    const Recording rec = generate_and_record(spec);
    const auto& tab = std::get<StabilizerTableau>(rec.final_state);
    const StateVector dense = replay_dense(rec.record);
    for (int start = 0; start < kQubits; ++start) {
      for (int len = 1; len < kQubits; ++len) {
        std::vector<int> q;
        for (int k = 0; k < len; ++k) q.push_back((start + k) % kQubits);
        const Subsystem region(q, kQubits);
        worst_entropy = std::max(worst_entropy, std::abs(entanglement_entropy(dense, region) - entropy(tab, region)));
      }
    }
    for (int r = 1; r <= 3; ++r) {
      const Subsystem a({0}, kQubits);
      std::vector<int> c;
      for (int q = 0; q < kQubits; ++q) {
        if (std::min(q, kQubits - q) > r) c.push_back(q);
      }
      const Subsystem cs(c, kQubits);
      worst_mi = std::max(worst_mi, std::abs(mutual_info(dense, a, cs) - mutual_info(tab, a, cs)));
    }
    for (int i = 0; i < kQubits; ++i) {
      const Subsystem a({i, (i + 1) % kQubits}, kQubits);
      const Subsystem c({(i + 4) % kQubits, (i + 5) % kQubits}, kQubits);
      worst_mi = std::max(worst_mi, std::abs(mutual_info(dense, a, c) - mutual_info(tab, a, c)));
    }
  }
  return {worst_entropy <= 1e-9 && worst_mi <= 1e-9,
          "max entropy gap " + fmt(worst_entropy) + " bits, max mutual information gap " + fmt(worst_mi) + " bits"};
}

// ---- 3: mutual information phase contrast ------------------------------------

Verdict mutual_information_phase_contrast() {
  const std::vector<int> rs{1, 8, 16};
  auto column = [](const std::vector<std::vector<double>>& s, std::size_t j) {
    std::vector<double> out;
    for (const auto& row : s) out.push_back(row[j]);
    return out;
  };
  const auto high = cluster_mi_samples(64, 64, 0.5, rs, 200, 0, worker_count());
  const auto low = cluster_mi_samples(64, 64, 0.05, rs, 200, 0, worker_count());
  const double hi1 = median_of(column(high, 0));
  const double hi8 = median_of(column(high, 1));
  const double lo16 = median_of(column(low, 2));
  const bool decays = hi1 > 0.0 && hi1 >= 10.0 * hi8;
  const bool persists = lo16 >= 0.2;
  return {decays && persists, "p=0.5 median I(1)=" + fmt(hi1) + " I(8)=" + fmt(hi8) + " (mean " +
                                  fmt(mean_of(column(high, 0))) + ", " + fmt(mean_of(column(high, 1))) +
                                  "); p=0.05 median I(16)=" + fmt(lo16) + " (mean " + fmt(mean_of(column(low, 2))) +
                                  ")"};
}

// ---- 4: data collapse --------------------------------------------------------

double area_master(double x) { return 2.68 * std::exp(-0.42 * std::pow(std::abs(x), 0.68)); }
double volume_master(double x) { return 1.88 * std::exp(-0.04 * std::pow(std::abs(x), 1.06)) + 0.21; }

Verdict data_collapse_machinery() {
  const std::vector<int> sizes{32, 64, 128};
  std::ostringstream detail;
  bool ok = true;

  // Planted exponents, with the p window placing the decay of each master
  // curve inside the data at the middle size.
  struct Planted {
    PhaseBranch branch;
    double (*master)(double);
    double b, d, nu;
  };
  detail << "synthetic nu:";
  for (const Planted& pl : {Planted{PhaseBranch::kArea, area_master, 0.42, 0.68, 1.70},
                            Planted{PhaseBranch::kVolume, volume_master, 0.04, 1.06, 0.75}}) {
    const bool area = pl.branch == PhaseBranch::kArea;
    const double scale = std::pow(64.0, 1.0 / pl.nu);
    const double x_lo = std::pow(0.1 / pl.b, 1.0 / pl.d) / scale;
    const double x_hi = std::min(std::pow(4.0 / pl.b, 1.0 / pl.d) / scale, area ? 0.8 : 0.15);
    std::vector<double> ps;
    for (int i = 0; i < 9; ++i) {
      const double dx = x_lo + (x_hi - x_lo) * i / 8.0;
      ps.push_back(area ? kCriticalRate + dx : kCriticalRate - dx);
    }
    const auto data = synthetic_collapse_data(pl.master, pl.nu, kCriticalRate, sizes, ps, 0.005, 7);
    const CollapseResult r = data_collapse(data, pl.branch);
    ok = ok && std::abs(r.nu - pl.nu) <= 0.15;
    detail << ' ' << to_string(pl.branch) << ' ' << fmt(pl.nu) << " -> " << fmt(r.nu);
  }

  const std::vector<double> ps{0.02, 0.04, 0.06, 0.08, 0.1, 0.12, 0.2, 0.25, 0.3, 0.35, 0.4, 0.5};
  std::vector<CollapsePoint> medians, means;
  for (int n : sizes) {
    for (double p : ps) {
      const auto samples = cluster_mi_samples(n, n, p, {n / 16}, 100, 0, worker_count());
      std::vector<double> col;
      for (const auto& s : samples) col.push_back(s[0]);
      medians.push_back({n, p, median_of(col)});
      means.push_back({n, p, mean_of(col)});
    }
  }
  auto decaying = [](const CollapseResult& r) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& s : r.points) {
      lo = std::min(lo, std::abs(s.x));
      hi = std::max(hi, std::abs(s.x));
    }
    const ExpFit& f = r.master_fit;
    return !f.degenerate && f.a > 0.0 && f.b > 0.0 && f(hi) < 0.5 * f(lo);
  };
  const CollapseResult area = data_collapse(medians, PhaseBranch::kArea);
  const CollapseResult volume = data_collapse(medians, PhaseBranch::kVolume);
  const bool area_ok = std::isfinite(area.nu) && !area.degenerate && decaying(area);
  const bool volume_ok = volume.master_fit.e > 0.05;
  ok = ok && area_ok && volume_ok;
  detail << "; median sweep: area nu=" << fmt(area.nu) << (area_ok ? " decaying" : " not decaying")
         << ", volume e=" << fmt(volume.master_fit.e);
  const CollapseResult area_mean = data_collapse(means, PhaseBranch::kArea);
  const CollapseResult volume_mean = data_collapse(means, PhaseBranch::kVolume);
  detail << "; mean sweep: area nu=" << fmt(area_mean.nu) << (decaying(area_mean) ? " decaying" : " not decaying")
         << ", volume e=" << fmt(volume_mean.master_fit.e);
  return {ok, detail.str()};
}

// ---- 5: infidelity versus beta -------------------------------------------------

Verdict infidelity_sweep_ordering() {
  InfidelitySweep s;
  s.n = 10;
  s.layers = 10;
  s.p_values = {0.5, 0.1};
  s.r_values = {1, 3};
  s.betas = {0.0, 0.5, 1.0, 2.0, 3.0};
  s.n_traj = 20;
  s.dtau = 0.1;
  s.tomography = TomographyMode::kExact;
  s.seed = 0;
  s.jobs = worker_count();
  const auto rows = infidelity_sweep(s);
  double worst_closed = 0.0;
  for (const auto& r : rows) worst_closed = std::max(worst_closed, std::abs(r.exact_infidelity - r.closed_form_infidelity));
  auto mean_at = [&](double p, int r) {
    for (const auto& m : mean_infidelity(rows)) {
      if (m.p == p && m.r == r && m.beta == 3.0) return m.mean_infidelity;
    }
    return std::nan("");
  };
  const double hi3 = mean_at(0.5, 3), hi1 = mean_at(0.5, 1), lo3 = mean_at(0.1, 3);
  const bool ok = hi3 <= 1e-2 && hi3 < hi1 && lo3 >= 3.0 * hi3 && worst_closed <= 1e-12;
  return {ok, "p=0.5 mean 1-F at beta=3: r=3 " + fmt(hi3) + ", r=1 " + fmt(hi1) + "; p=0.1 r=3 " + fmt(lo3) +
                  " (ratio " + fmt(lo3 / hi3) + "); max |exact - closed form| " + fmt(worst_closed)};
}

// ---- 6: budgeted replay ----------------------------------------------------------

Verdict budgeted_replay() {
  CircuitSpec spec;
  spec.n = 8;
  spec.layers = 8;
  spec.p = 0.3;
  spec.family = GateFamily::kHaar;
  spec.seed = 2024;
  const TrajectoryRecord record = generate_and_record(spec).record;
  ReplayOptions opt;
  opt.qite.r = 3;
  opt.qite.dtau = 0.1;
  opt.qite.tomography = TomographyMode::kExact;
  opt.epsilon = 0.1;
  const ReplayResult first = replay_trajectory(record, opt);
  const ReplayResult second = replay_trajectory(record, opt, &first.learned);
  const double drift = (first.state.amplitudes() - second.state.amplitudes()).cwiseAbs().maxCoeff();
  const bool ok = first.final_fidelity >= 0.9 && drift <= 1e-12;
  return {ok, std::to_string(record.measurements.size()) + " measurements, r=3, F=" + fmt(first.final_fidelity) +
                  ", stored replay max amplitude drift " + fmt(drift)};
}

// ---- 7: amplification gadget ------------------------------------------------------

Verdict amplification_gadget_exact() {
  bool ok = true;
  double worst = 0.0;
  double min_prob = 1.0;
  double fidelity_k4 = 0.0;
  for (int k : {4, 6}) {
    const GadgetResult g = amplification_gadget(k, 12, GadgetMode::kExact);
    const double a2 = 1.0 / (1.0 + std::pow(4.0, k));
    const double b2 = 1.0 - a2;
    for (std::size_t j = 0; j < g.step_probabilities.size(); ++j) {
      const double s = std::ldexp(1.0, static_cast<int>(j));
      const double expected = (a2 + b2 / (2.0 * s)) / (a2 + b2 / s);
      worst = std::max(worst, std::abs(g.step_probabilities[j] - expected));
      min_prob = std::min(min_prob, g.step_probabilities[j]);
    }
    ok = ok && g.step_probabilities.size() == 12;
    if (k == 4) fidelity_k4 = g.final_fidelity;
  }
  ok = ok && worst <= 1e-12 && min_prob > 0.5 && fidelity_k4 >= 0.99;
  return {ok, "max step probability error " + fmt(worst) + ", min step probability " + fmt(min_prob) +
                  ", final fidelity (k_amp=4, m=12) " + fmt(fidelity_k4)};
}

// ---- 8: budget formulas --------------------------------------------------------------

Verdict budget_formulas() {
  int failures = 0;
  auto near = [&](double got, double want) {
    if (!(std::abs(got - want) <= 1e-12)) ++failures;
  };
  near(error_budget(0.1, 50), 0.001);
  near(error_budget(0.1, 1), 0.05);
  near(required_beta(0.5, 10, 0.01, 2.0), 0.5 * std::log(1000.0));
  near(required_beta(0.5, 1, 1.0, 2.0), 0.0);
  near(required_beta(0.2, 5, 0.1, 2.0), 0.5 * std::log(2.0 * 5.0 / 0.1));
  if (trotter_steps(0.5 * std::log(1000.0), 0.1) != 35) ++failures;
  if (trotter_steps(1.0, 0.1) != 10) ++failures;
  const double lg = std::log(1000.0);
  near(runtime_estimate(10, 0.01, 2.0, 1.0) / (100.0 / 0.01 / 4.0 * lg * lg), 1.0);

  Polynomial n_times_m;
  n_times_m.terms.push_back({1.0, 1.0, 1.0});
  const FailureBound fb = failure_probability_bound(100, 64, n_times_m);
  near(fb.delta, 1.0 / 640000.0);
  near(fb.approx, 1.5625e-4);
  // 1 - (1 - d)^M = sum_k (-1)^{k+1} C(M, k) d^k, summed in long double.
  long double series = 0.0L, term = 1.0L;
  for (int k = 1; k <= 100; ++k) {
    term *= static_cast<long double>(100 - k + 1) / k / 640000.0L;
    series += (k % 2 == 1 ? term : -term);
  }
  near(fb.bound, static_cast<double>(series));
  Polynomial one;
  one.terms.push_back({1.0, 0.0, 0.0});
  const FailureBound unit = failure_probability_bound(1, 8, one);
  near(unit.delta, 1.0);
  near(unit.bound, 1.0);
  if (!unit.degenerate) ++failures;

  int grid_failures = 0;
  int grid_points = 0;
  for (int ip = 0; ip < 20; ++ip) {
    const double p = 0.01 + 0.98 * ip / 19.0;
    for (int m : {1, 2, 3, 5, 8, 13, 21, 50, 100, 1000}) {
      for (double eps : {1e-4, 1e-3, 1e-2, 0.1, 0.5}) {
        ++grid_points;
        const double beta = required_beta(p, m, eps, kOutcomeGap);
        if (fidelity_bound(p, beta, kOutcomeGap) < 1.0 - (eps / m) * (eps / m) - 1e-15) ++grid_failures;
      }
    }
  }
  return {failures == 0 && grid_failures == 0 && grid_points == 1000,
          std::to_string(failures) + " formula mismatches, " + std::to_string(grid_failures) + "/" +
              std::to_string(grid_points) + " grid points below 1 - (eps/M)^2"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Verdict (*run)();
};

}  // namespace
}  // namespace mipt::acceptance

int main() {
  using namespace mipt::acceptance;
  const Criterion criteria[] = {
      {1, "fidelity bound on random states", 10, fidelity_bound_on_random_states},
      {2, "stabilizer and dense backends agree", 30, stabilizer_matches_dense},
      {3, "mutual information phase contrast", 600, mutual_information_phase_contrast},
      {4, "finite-size data collapse", 1800, data_collapse_machinery},
      {5, "DQITE infidelity versus beta", 1200, infidelity_sweep_ordering},
      {6, "budgeted trajectory replay", 600, budgeted_replay},
      {7, "amplification gadget", 60, amplification_gadget_exact},
      {8, "budget formulas", 1, budget_formulas},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = v.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s %d %s: %s [%.2f s of %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                seconds, c.limit_seconds, in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
