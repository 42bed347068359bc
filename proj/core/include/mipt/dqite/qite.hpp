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
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "mipt/dense/local_operator.hpp"
#include "mipt/dense/state_vector.hpp"
#include "mipt/subsystem.hpp"

namespace mipt {

/// Largest tomography domain |D| = 2r + 1 the engine accepts.
inline constexpr int kMaxDomainSize = 7;

enum class TomographyMode { kExact, kSampled };

struct QiteConfig {
  double beta = 3.0;
  double dtau = 0.1;
  /// Half-width of the domain D around the measured qubit.
  int r = 1;
  /// Tikhonov regularization of the normal equations.
  double lambda = 1e-8;
  TomographyMode tomography = TomographyMode::kExact;
  /// Shots per Pauli expectation in sampled mode.
  std::int64_t shots = 1000;
  std::uint64_t tomography_seed = 0;
  /// Overrides the ring neighborhood of the target qubit when set.
  std::optional<Subsystem> domain;

  /// Throws InvalidArgument on beta < 0, dtau <= 0, r < 1, lambda < 0 or
  /// shots < 1 in sampled mode. beta = 0 means no Trotter steps.
  void validate() const;
};

/// One learned Trotter step: U = exp(-i dtau A), A = sum_I a_I sigma_I over
/// the Pauli strings on `domain` (base-4 little-endian index, see
/// pauli_basis.hpp).
struct LearnedStep {
  Subsystem domain;
  Eigen::VectorXd coefficients;
  double dtau = 0.0;

  Eigen::MatrixXcd hamiltonian() const;
  Eigen::MatrixXcd unitary() const;
  bool operator==(const LearnedStep& o) const {
    return domain == o.domain && dtau == o.dtau && coefficients == o.coefficients;
  }
};

/// The learned replacement of one measurement.
struct LearnedPostselection {
  int target_qubit = 0;
  int outcome = 0;
  std::vector<LearnedStep> steps;
  bool operator==(const LearnedPostselection&) const = default;
};

/// Hamiltonian (2m - 1) sigma_Z on qubit q: ground state |m>, gap 2.
LocalOperator outcome_hamiltonian(int q, int m, int num_qubits);

/// D = qubits within ring distance r of q. Throws InvalidArgument when
/// |D| > kMaxDomainSize.
Subsystem qite_domain(int q, int r, int num_qubits);

/// Coefficients below this magnitude are dropped from learned steps.
inline constexpr double kCoefficientCutoff = 1e-12;

/// Solves the regularized normal equations (S + S^T + lambda) a = -b in
/// closed form. With rho the (possibly estimated) state on D and F the
/// diagonal operator (c^{-1/2} e^{-dtau h} - 1) / dtau on D, the normal
/// equations are equivalent to rho A + A rho + (lambda / d) A = i [F, rho],
/// which is diagonal in the eigenbasis of rho. Pairs whose denominator falls
/// below 1e-12 of the largest are dropped (pseudo-inverse). `q_local` is the
/// bit position of the measured qubit inside D.
Eigen::MatrixXcd solve_step_generator(const Eigen::MatrixXcd& rho, int q_local, int outcome, double dtau,
                                      double lambda);

/// Reference solver: assembles S_IJ = Re Tr(rho s_I s_J) and
/// b_I = 2 Im Tr(rho s_I F) from explicit Pauli matrices and solves the
/// normal equations directly. Cost grows as 16^|D|; meant for |D| <= 4.
Eigen::VectorXd solve_step_coefficients_reference(const Eigen::MatrixXcd& rho, int q_local, int outcome,
                                                  double dtau, double lambda);

/// Tomographic estimate of rho_D: exact partial trace, or in sampled mode
/// every non-identity Pauli expectation replaced by the mean of `shots`
/// +-1 outcomes, then reassembled by linear inversion.
Eigen::MatrixXcd tomography(const StateVector& state, const Subsystem& domain, const QiteConfig& config,
                            std::mt19937_64* rng);

struct QiteStepResult {
  LearnedStep step;
  StateVector state;
};

/// One Trotter step of deterministic imaginary-time evolution toward
/// outcome m on qubit q. Throws NumericalError when the Born weight of m is
/// <= 1e-6. `rng` is required only in sampled mode.
QiteStepResult qite_step(const StateVector& state, int q, int m, const QiteConfig& config,
                         std::mt19937_64* rng = nullptr);

struct StepDiagnostics {
  double coefficient_norm = 0.0;
  /// Fidelity with the projected target after this step, when tracked.
  std::optional<double> target_fidelity;
};

struct PostselectResult {
  LearnedPostselection learned;
  StateVector state;
  std::vector<StepDiagnostics> diagnostics;
  /// Fidelity with the target before the first step, when tracked.
  std::optional<double> initial_fidelity;
};

/// Runs trotter_steps(beta, dtau) QITE steps. With `track_fidelity`, the
/// exact project_z target is computed once and compared after every step.
PostselectResult deterministic_postselect(const StateVector& state, int q, int m, const QiteConfig& config,
                                          bool track_fidelity = true, std::uint64_t stream = 0);

/// Applies a learned postselection's unitaries in order.
void apply_learned(StateVector& state, const LearnedPostselection& learned);

}  // namespace mipt
