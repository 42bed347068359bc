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

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cli_util.hpp"
#include "mipt/analysis/bounds_report.hpp"
#include "mipt/analysis/collapse.hpp"
#include "mipt/analysis/csv.hpp"
#include "mipt/analysis/failure.hpp"
#include "mipt/analysis/gadget.hpp"
#include "mipt/analysis/infidelity.hpp"
#include "mipt/analysis/mutual_info.hpp"
#include "mipt/circuit/generate.hpp"
#include "mipt/dqite/learned_io.hpp"
#include "mipt/dqite/trajectory.hpp"
#include "mipt/error.hpp"
#include "mipt/random.hpp"

namespace mipt::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

Json fit_json(const ExpFit& f) {
  return Json{{"a", f.a}, {"b", f.b}, {"d", f.d}, {"e", f.e}, {"residual", f.residual},
              {"offset_free", f.offset_free}, {"degenerate", f.degenerate}};
}

TomographyMode parse_tomography(const std::string& text) {
  if (text == "exact") return TomographyMode::kExact;
  if (text == "sampled") return TomographyMode::kSampled;
  throw InvalidArgument("unknown tomography mode '" + text + "'");
}

struct QiteArgs {
  double beta = 3.0;
  double dtau = 0.1;
  int r = 1;
  double lambda = 1e-8;
  std::string tomography = "exact";
  std::int64_t shots = 1000;

  void add(CLI::App* app, bool with_r = true) {
    app->add_option("--dtau", dtau, "Trotter step size")->capture_default_str();
    if (with_r) app->add_option("--r", r, "domain half-width")->capture_default_str();
    app->add_option("--lambda", lambda, "Tikhonov regularization")->capture_default_str();
    app->add_option("--tomography", tomography, "exact or sampled")->capture_default_str();
    app->add_option("--shots", shots, "shots per Pauli expectation in sampled mode")->capture_default_str();
  }
  QiteConfig config(std::uint64_t seed) const {
    QiteConfig c;
    c.beta = beta;
    c.dtau = dtau;
    c.r = r;
    c.lambda = lambda;
    c.tomography = parse_tomography(tomography);
    c.shots = shots;
    c.tomography_seed = seed;
    return c;
  }
  Json json() const {
    return Json{{"dtau", dtau}, {"r", r}, {"lambda", lambda}, {"tomography", tomography}, {"shots", shots}};
  }
};

// ---- record ----------------------------------------------------------------

struct RecordArgs {
  int n = 16;
  int layers = 16;
  double p = 0.3;
  std::string family = "clifford";
  std::string initial;
  std::uint64_t seed = 0;
  std::string out = "trajectory.traj.json";
};

void run_record(const RecordArgs& a, RunManifest& manifest) {
  CircuitSpec spec;
  spec.n = a.n;
  spec.layers = a.layers;
  spec.p = a.p;
  spec.family = parse_gate_family(a.family);
  spec.seed = a.seed;
  spec.initial_bitstring = a.initial;
  spec.validate();
  const Recording rec = generate_and_record(spec);
  write_atomic(a.out, serialize(rec.record));
  manifest.parameters() = Json{{"n", a.n}, {"layers", a.layers}, {"p", a.p}, {"family", a.family},
                               {"initial_bitstring", a.initial}};
  manifest.set_seed(a.seed);
  manifest.add_output(a.out);
  manifest.write(a.out);
}

// ---- mutualinfo ------------------------------------------------------------

struct MutualInfoArgs {
  int n = 64;
  int layers = 0;
  std::vector<double> p{0.05, 0.1, 0.16, 0.3, 0.5};
  std::vector<int> r;
  int ntraj = 200;
  std::string stat = "median";
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out = "mutualinfo.csv";
};

void run_mutualinfo(const MutualInfoArgs& a, RunManifest& manifest) {
  MutualInfoSweep s;
  s.n = a.n;
  s.layers = a.layers > 0 ? a.layers : a.n;
  s.p_values = a.p;
  s.r_values = a.r;
  if (s.r_values.empty()) {
    for (int r = 1; 2 * r < a.n; ++r) s.r_values.push_back(r);
  }
  s.n_traj = a.ntraj;
  s.stat = parse_statistic(a.stat);
  s.seed = a.seed;
  s.jobs = resolve_jobs(a.jobs);
  for (double p : s.p_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("measurement rates must lie in [0, 1]");
  }
  const auto curves = sweep_mutual_info(s);
  write_atomic(a.out, mutual_info_csv(curves));
  manifest.parameters() = Json{{"n", s.n}, {"layers", s.layers}, {"p", s.p_values}, {"r", s.r_values},
                               {"ntraj", s.n_traj}, {"stat", a.stat}};
  manifest.set_seed(a.seed);
  manifest.add_output(a.out);
  manifest.write(a.out);
}

// ---- collapse --------------------------------------------------------------

struct CollapseArgs {
  std::vector<int> n{32, 64, 128};
  std::vector<double> p{0.02, 0.04, 0.06, 0.08, 0.1, 0.12, 0.2, 0.25, 0.3, 0.35, 0.4, 0.5};
  int ntraj = 100;
  std::string stat = "median";
  double p_c = kCriticalRate;
  double nu_lo = 0.3;
  double nu_hi = 3.0;
  std::vector<double> synthetic;
  double noise = 0.0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out = "collapse.json";
};

std::vector<CollapsePoint> synthetic_points(const CollapseArgs& a, PhaseBranch branch, double nu) {
  std::vector<double> ps;
  for (double p : a.p) {
    if ((branch == PhaseBranch::kArea) == (p > a.p_c) && p != a.p_c) ps.push_back(p);
  }
  const auto master = branch == PhaseBranch::kArea
                          ? std::function<double(double)>([](double x) { return 2.68 * std::exp(-0.42 * std::pow(std::abs(x), 0.68)); })
                          : std::function<double(double)>([](double x) {
                              return 1.88 * std::exp(-0.04 * std::pow(std::abs(x), 1.06)) + 0.21;
                            });
  return synthetic_collapse_data(master, nu, a.p_c, a.n, ps, a.noise, derive_seed(a.seed, StreamPurpose::kSynthetic,
                                                                                  static_cast<std::uint64_t>(branch)));
}

void run_collapse(const CollapseArgs& a, RunManifest& manifest) {
  for (int n : a.n) {
    if (n <= 0 || n % 16 != 0) throw InvalidArgument("n = " + std::to_string(n) + " is not divisible by 16");
  }
  CollapseOptions opt;
  opt.p_c = a.p_c;
  opt.nu_lo = a.nu_lo;
  opt.nu_hi = a.nu_hi;
  if (!a.synthetic.empty() && a.synthetic.size() != 2) {
    throw InvalidArgument("--synthetic takes two planted exponents: area and volume");
  }

  std::vector<CollapsePoint> measured;
  const Statistic stat = parse_statistic(a.stat);
  if (a.synthetic.empty()) {
    for (int n : a.n) {
      for (double p : a.p) {
        const auto samples = cluster_mi_samples(n, n, p, {n / 16}, a.ntraj, a.seed, resolve_jobs(a.jobs));
        std::vector<double> column;
        for (const auto& s : samples) column.push_back(s[0]);
        measured.push_back({n, p, aggregate(column, stat).value});
      }
    }
  }

  Json branches = Json::array();
  for (PhaseBranch branch : {PhaseBranch::kArea, PhaseBranch::kVolume}) {
    const auto points = a.synthetic.empty()
                            ? measured
                            : synthetic_points(a, branch, a.synthetic[branch == PhaseBranch::kArea ? 0 : 1]);
    const CollapseResult res = data_collapse(points, branch, opt);
    Json pts = Json::array();
    for (const auto& s : res.points) pts.push_back(Json{{"n", s.n}, {"p", s.p}, {"x", s.x}, {"value", s.value}});
    branches.push_back(Json{{"branch", to_string(branch)}, {"nu", res.nu}, {"p_c", res.p_c}, {"residual", res.residual},
                            {"degenerate", res.degenerate}, {"master_fit", fit_json(res.master_fit)}, {"points", pts}});
  }
  Json report{{"p_c", a.p_c}, {"r_rule", "n/16"}, {"branches", branches}};
  write_atomic(a.out, dump_json(report));
  manifest.parameters() = Json{{"n", a.n}, {"p", a.p}, {"ntraj", a.ntraj}, {"stat", a.stat}, {"p_c", a.p_c},
                               {"nu_lo", a.nu_lo}, {"nu_hi", a.nu_hi}, {"synthetic", a.synthetic}, {"noise", a.noise}};
  manifest.set_seed(a.seed);
  manifest.add_output(a.out);
  manifest.write(a.out);
}

// ---- replay ----------------------------------------------------------------

struct ReplayArgs {
  std::string traj;
  QiteArgs qite;
  std::optional<double> epsilon;
  std::optional<double> beta;
  std::string learned_in;
  std::string learned_out;
  std::string state_out;
  std::uint64_t seed = 0;
  std::string out = "replay.json";
};

int run_replay(const ReplayArgs& a, RunManifest& manifest) {
  const TrajectoryRecord record = deserialize(read_file(a.traj));
  ReplayOptions opt;
  opt.qite = a.qite.config(a.seed);
  if (a.beta) opt.qite.beta = *a.beta;
  opt.epsilon = a.epsilon;
  std::vector<LearnedPostselection> stored;
  if (!a.learned_in.empty()) stored = deserialize_learned(read_file(a.learned_in));
  const ReplayResult res = replay_trajectory(record, opt, a.learned_in.empty() ? nullptr : &stored);

  Json meas = Json::array();
  for (const auto& d : res.diagnostics) {
    meas.push_back(Json{{"layer_gap", d.layer_gap}, {"qubit", d.qubit}, {"outcome", d.outcome}, {"born_p", d.born_p},
                        {"beta", d.beta}, {"n_beta", d.n_beta}, {"local_infidelity", d.local_infidelity},
                        {"local_trace_distance", d.local_trace_distance},
                        {"cumulative_infidelity", d.cumulative_infidelity}, {"budget_violation", d.budget_violation}});
  }
  double sum_td = 0.0;
  for (const auto& d : res.diagnostics) sum_td += d.local_trace_distance;
  Json report{{"trajectory", a.traj},
              {"n", record.spec.n},
              {"num_measurements", record.measurements.size()},
              {"learned_from_file", !a.learned_in.empty()},
              {"final_fidelity", res.final_fidelity},
              {"final_trace_distance", std::sqrt(std::max(0.0, 1.0 - res.final_fidelity))},
              {"sum_local_trace_distance", sum_td},
              {"epsilon", a.epsilon ? Json(*a.epsilon) : Json(nullptr)},
              {"epsilon_beta", res.epsilon_beta ? Json(*res.epsilon_beta) : Json(nullptr)},
              {"budget_met", !res.budget_violated},
              {"log_convention", "natural"},
              {"measurements", meas}};
  if (res.budget_violated) {
    std::cerr << "warning: per-measurement infidelity exceeded epsilon_beta for at least one measurement\n";
  }

  const std::string learned_out = a.learned_out.empty() ? a.out + ".learned.json" : a.learned_out;
  write_atomic(learned_out, serialize_learned(res.learned));
  if (!a.state_out.empty()) {
    Json amps = Json::array();
    for (Eigen::Index i = 0; i < res.state.amplitudes().size(); ++i) {
      amps.push_back(Json::array({res.state.amplitudes()[i].real(), res.state.amplitudes()[i].imag()}));
    }
    write_atomic(a.state_out, dump_json(Json{{"n", record.spec.n}, {"amplitudes", amps}}, -1));
    manifest.add_output(a.state_out);
  }
  write_atomic(a.out, dump_json(report));
  manifest.parameters() = Json{{"traj", a.traj}, {"qite", a.qite.json()},
                               {"beta", a.beta ? Json(*a.beta) : Json(nullptr)},
                               {"epsilon", a.epsilon ? Json(*a.epsilon) : Json(nullptr)}, {"learned", a.learned_in}};
  manifest.set_seed(a.seed);
  manifest.add_output(a.out);
  manifest.add_output(learned_out);
  manifest.write(a.out);
  return kExitOk;
}

// ---- fidelity-sweep ----------------------------------------------------------

struct SweepArgs {
  int n = 10;
  int layers = 0;
  std::vector<double> p{0.5, 0.1};
  std::vector<int> r{1, 2, 3};
  std::string beta = "0:3:0.25";
  int ntraj = 20;
  QiteArgs qite;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out = "fidelity.csv";
};

void run_fidelity_sweep(const SweepArgs& a, RunManifest& manifest) {
  InfidelitySweep s;
  s.n = a.n;
  s.layers = a.layers > 0 ? a.layers : a.n;
  s.p_values = a.p;
  s.r_values = a.r;
  s.betas = parse_grid(a.beta);
  s.n_traj = a.ntraj;
  s.dtau = a.qite.dtau;
  s.lambda = a.qite.lambda;
  s.tomography = parse_tomography(a.qite.tomography);
  s.shots = a.qite.shots;
  s.seed = a.seed;
  s.jobs = resolve_jobs(a.jobs);
  const auto rows = infidelity_sweep(s);
  write_atomic(a.out, infidelity_csv(rows));
  manifest.parameters() = Json{{"n", s.n}, {"layers", s.layers}, {"p", s.p_values}, {"r", s.r_values},
                               {"beta", a.beta}, {"ntraj", s.n_traj}, {"qite", a.qite.json()}};
  manifest.set_seed(a.seed);
  manifest.add_output(a.out);
  manifest.write(a.out);
}

// ---- bounds ------------------------------------------------------------------

struct BoundsArgs {
  double born_p = 0.5;
  int m = 1;
  double epsilon = 0.1;
  double gap = kOutcomeGap;
  double dtau = 0.1;
  int n = 64;
  std::vector<std::string> poly{"1:1:1"};
  std::string out = "bounds.json";
};

Polynomial parse_poly(const std::vector<std::string>& terms) {
  Polynomial poly;
  for (const auto& t : terms) {
    std::vector<double> v;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ':')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw InvalidArgument("polynomial term '" + t + "' must be coef:n_degree:M_degree");
      }
    }
    if (v.size() != 3) throw InvalidArgument("polynomial term '" + t + "' must be coef:n_degree:M_degree");
    poly.terms.push_back({v[0], v[1], v[2]});
  }
  return poly;
}

void run_bounds(const BoundsArgs& a, RunManifest& manifest) {
  const BoundsReport r = eval_bounds_report(a.born_p, a.m, a.epsilon, a.gap, a.dtau);
  const FailureBound f = failure_probability_bound(a.m, a.n, parse_poly(a.poly));
  Json report{{"log_convention", "natural"},
              {"inputs", Json{{"P", a.born_p}, {"M", a.m}, {"epsilon", a.epsilon}, {"gap", a.gap}, {"dtau", a.dtau},
                              {"n", a.n}, {"poly", a.poly}}},
              {"budget", Json{{"c", r.c},
                              {"epsilon_beta", r.epsilon_beta},
                              {"beta", r.beta},
                              {"n_beta", r.n_beta},
                              {"T_beta", r.t_beta},
                              {"runtime_total", r.runtime_total},
                              {"fidelity_bound", r.fidelity_bound}}},
              {"failure", Json{{"poly_value", f.poly_value},
                               {"delta", f.delta},
                               {"bound", f.bound},
                               {"approx", f.approx},
                               {"degenerate", f.degenerate}}}};
  write_atomic(a.out, dump_json(report));
  manifest.parameters() = report["inputs"];
  manifest.add_output(a.out);
  manifest.write(a.out);
}

// ---- amplify -----------------------------------------------------------------

struct AmplifyArgs {
  int k_amp = 4;
  int m = 12;
  std::string mode = "exact";
  double beta = 3.0;
  QiteArgs qite;
  std::uint64_t seed = 0;
  std::string out = "amplify.json";
};

Json gadget_json(const GadgetResult& g) {
  return Json{{"mode", to_string(g.mode)},
              {"k_amp", g.k_amp},
              {"m", g.m},
              {"alpha", g.alpha},
              {"beta_amp", g.beta_amp},
              {"step_probabilities", g.step_probabilities},
              {"predicted_probabilities", g.predicted_probabilities},
              {"final_fidelity", g.final_fidelity},
              {"predicted_final_fidelity", g.predicted_final_fidelity}};
}

void run_amplify(const AmplifyArgs& a, RunManifest& manifest) {
  QiteConfig cfg = a.qite.config(a.seed);
  cfg.beta = a.beta;
  Json runs = Json::array();
  std::vector<GadgetResult> results;
  if (a.mode == "both") {
    results.push_back(amplification_gadget(a.k_amp, a.m, GadgetMode::kExact, cfg));
    results.push_back(amplification_gadget(a.k_amp, a.m, GadgetMode::kDqite, cfg));
  } else {
    results.push_back(amplification_gadget(a.k_amp, a.m, parse_gadget_mode(a.mode), cfg));
  }
  for (const auto& g : results) runs.push_back(gadget_json(g));
  Json report{{"runs", runs}};
  if (results.size() == 2) {
    report["final_fidelity_gap"] = std::abs(results[0].final_fidelity - results[1].final_fidelity);
  }
  write_atomic(a.out, dump_json(report));
  manifest.parameters() = Json{{"k_amp", a.k_amp}, {"m", a.m}, {"mode", a.mode}, {"beta", a.beta},
                               {"qite", a.qite.json()}};
  manifest.set_seed(a.seed);
  manifest.add_output(a.out);
  manifest.write(a.out);
}

int classify(const std::exception& e) {
  if (dynamic_cast<const NumericalError*>(&e) != nullptr || dynamic_cast<const ImpossibleOutcome*>(&e) != nullptr) {
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Measured random circuits and deterministic trajectory preparation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MIPT_VERSION);

  RecordArgs rec;
  auto* c_rec = app.add_subcommand("record", "generate one trajectory and write a .traj.json record");
  c_rec->add_option("--n", rec.n, "number of qubits (even)")->capture_default_str();
  c_rec->add_option("--layers", rec.layers, "brickwork layers")->capture_default_str();
  c_rec->add_option("--p", rec.p, "measurement rate")->capture_default_str();
  c_rec->add_option("--family", rec.family, "clifford or haar")->capture_default_str();
  c_rec->add_option("--initial", rec.initial, "initial bitstring (default all zeros)");
  c_rec->add_option("--seed", rec.seed, "master seed")->capture_default_str();
  c_rec->add_option("--out", rec.out, "output path")->capture_default_str();

  MutualInfoArgs mi;
  auto* c_mi = app.add_subcommand("mutualinfo", "cluster mutual information I(A,C)(r) sweep (CSV)");
  c_mi->add_option("--n", mi.n, "number of qubits")->capture_default_str();
  c_mi->add_option("--layers", mi.layers, "layers (default n)");
  c_mi->add_option("--p", mi.p, "measurement rates")->delimiter(',')->capture_default_str();
  c_mi->add_option("--r", mi.r, "distances (default 1..n/2-1)")->delimiter(',');
  c_mi->add_option("--ntraj", mi.ntraj, "trajectories per rate")->capture_default_str();
  c_mi->add_option("--stat", mi.stat, "median or mean")->capture_default_str();
  c_mi->add_option("--seed", mi.seed, "master seed")->capture_default_str();
  c_mi->add_option("--jobs", mi.jobs, "worker threads (0 = all cores)")->capture_default_str();
  c_mi->add_option("--out", mi.out, "output path")->capture_default_str();

  CollapseArgs co;
  auto* c_co = app.add_subcommand("collapse", "finite-size data collapse at r = n/16 (JSON)");
  c_co->add_option("--n", co.n, "system sizes, each divisible by 16")->delimiter(',')->capture_default_str();
  c_co->add_option("--p", co.p, "measurement rates")->delimiter(',')->capture_default_str();
  c_co->add_option("--ntraj", co.ntraj, "trajectories per point")->capture_default_str();
  c_co->add_option("--stat", co.stat, "median or mean")->capture_default_str();
  c_co->add_option("--p-c", co.p_c, "critical rate")->capture_default_str();
  c_co->add_option("--nu-lo", co.nu_lo, "lower end of the nu search")->capture_default_str();
  c_co->add_option("--nu-hi", co.nu_hi, "upper end of the nu search")->capture_default_str();
  c_co->add_option("--synthetic", co.synthetic, "planted nu for the area and volume branches")->delimiter(',')
      ->expected(2);
  c_co->add_option("--noise", co.noise, "Gaussian noise on synthetic data")->capture_default_str();
  c_co->add_option("--seed", co.seed, "master seed")->capture_default_str();
  c_co->add_option("--jobs", co.jobs, "worker threads (0 = all cores)")->capture_default_str();
  c_co->add_option("--out", co.out, "output path")->capture_default_str();

  ReplayArgs rp;
  auto* c_rp = app.add_subcommand("replay", "replay a trajectory with learned deterministic postselection");
  c_rp->add_option("--traj", rp.traj, "input .traj.json")->required();
  rp.qite.add(c_rp);
  c_rp->add_option("--beta", rp.beta, "fixed imaginary time per measurement");
  c_rp->add_option("--epsilon", rp.epsilon, "total trace-distance target; sets beta per measurement");
  c_rp->add_option("--learned", rp.learned_in, "apply stored learned unitaries instead of learning");
  c_rp->add_option("--learned-out", rp.learned_out, "learned unitary file (default <out>.learned.json)");
  c_rp->add_option("--state-out", rp.state_out, "write final amplitudes as JSON");
  c_rp->add_option("--seed", rp.seed, "tomography seed")->capture_default_str();
  c_rp->add_option("--out", rp.out, "report path")->capture_default_str();

  SweepArgs sw;
  auto* c_sw = app.add_subcommand("fidelity-sweep", "DQITE infidelity versus beta (CSV)");
  c_sw->add_option("--n", sw.n, "number of qubits")->capture_default_str();
  c_sw->add_option("--layers", sw.layers, "layers (default n)");
  c_sw->add_option("--p", sw.p, "measurement rates")->delimiter(',')->capture_default_str();
  c_sw->add_option("--r", sw.r, "domain half-widths")->delimiter(',')->capture_default_str();
  c_sw->add_option("--beta", sw.beta, "beta grid start:stop:step")->capture_default_str();
  c_sw->add_option("--ntraj", sw.ntraj, "trajectories per rate")->capture_default_str();
  sw.qite.add(c_sw, false);
  c_sw->add_option("--seed", sw.seed, "master seed")->capture_default_str();
  c_sw->add_option("--jobs", sw.jobs, "worker threads (0 = all cores)")->capture_default_str();
  c_sw->add_option("--out", sw.out, "output path")->capture_default_str();

  BoundsArgs bd;
  auto* c_bd = app.add_subcommand("bounds", "error budget, runtime and failure-probability bounds (JSON)");
  c_bd->add_option("--P", bd.born_p, "Born probability of the target outcome")->capture_default_str();
  c_bd->add_option("--M", bd.m, "number of measurements")->capture_default_str();
  c_bd->add_option("--epsilon", bd.epsilon, "final trace-distance target")->capture_default_str();
  c_bd->add_option("--gap", bd.gap, "energy gap")->capture_default_str();
  c_bd->add_option("--dtau", bd.dtau, "Trotter step size")->capture_default_str();
  c_bd->add_option("--n", bd.n, "number of qubits for the failure bound")->capture_default_str();
  c_bd->add_option("--poly", bd.poly, "poly(n, M) terms coef:n_degree:M_degree")->delimiter(',')
      ->capture_default_str();
  c_bd->add_option("--out", bd.out, "output path")->capture_default_str();

  AmplifyArgs am;
  auto* c_am = app.add_subcommand("amplify", "controlled-Hadamard amplification gadget (JSON)");
  c_am->add_option("--k-amp", am.k_amp, "small/large branch amplitude ratio 2^-k")->capture_default_str();
  c_am->add_option("--m", am.m, "ancilla count")->capture_default_str();
  c_am->add_option("--mode", am.mode, "exact, dqite or both")->capture_default_str();
  c_am->add_option("--beta", am.beta, "imaginary time per ancilla in dqite mode")->capture_default_str();
  am.qite.add(c_am);
  c_am->add_option("--seed", am.seed, "tomography seed")->capture_default_str();
  c_am->add_option("--out", am.out, "output path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunManifest manifest(app.get_subcommands().front()->get_name(), args);
    if (*c_rec) run_record(rec, manifest);
    if (*c_mi) run_mutualinfo(mi, manifest);
    if (*c_co) run_collapse(co, manifest);
    if (*c_rp) run_replay(rp, manifest);
    if (*c_sw) run_fidelity_sweep(sw, manifest);
    if (*c_bd) run_bounds(bd, manifest);
    if (*c_am) run_amplify(am, manifest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return classify(e);
  }
  return kExitOk;
}

}  // namespace mipt::cli

int main(int argc, char** argv) { return mipt::cli::run(argc, argv); }
