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

#include "mipt/dqite/qite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "mipt/dense/density.hpp"
#include "mipt/dqite/budget.hpp"
#include "mipt/dqite/pauli_basis.hpp"
#include "mipt/error.hpp"
#include "mipt/random.hpp"

namespace mipt {
namespace {

using cd = std::complex<double>;

// Minimum Born weight of the target outcome before a step.
constexpr double kMinBornWeight = 1e-6;
// Eigenvalues of rho below this are treated as exact zeros.
constexpr double kEigenFloor = 1e-14;
constexpr double kPinvCutoff = 1e-12;

// Diagonal of e^{-dtau h} on D for h = (2m - 1) Z_q.
Eigen::VectorXd outcome_propagator_diagonal(Eigen::Index d, int q_local, int outcome, double dtau) {
  const double s = 2.0 * outcome - 1.0;
  Eigen::VectorXd e(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double z = ((i >> q_local) & 1) ? -1.0 : 1.0;
    e[i] = std::exp(-dtau * s * z);
  }
  return e;
}

// F = (c^{-1/2} e^{-dtau h} - 1) / dtau, c = <e^{-2 dtau h}>.
Eigen::VectorXd target_direction_diagonal(const Eigen::MatrixXcd& rho, int q_local, int outcome, double dtau) {
  const Eigen::VectorXd e = outcome_propagator_diagonal(rho.rows(), q_local, outcome, dtau);
  double c = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) c += rho(i, i).real() * e[i] * e[i];
  if (!(c > 0.0)) throw NumericalError("normalization <e^{-2 dtau h}> is not positive");
  return (e / std::sqrt(c) - Eigen::VectorXd::Ones(rho.rows())) / dtau;
}

double outcome_weight(const Eigen::MatrixXcd& rho, int q_local, int outcome) {
  double p = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    if (((i >> q_local) & 1) == outcome) p += rho(i, i).real();
  }
  return p;
}

}  // namespace

void QiteConfig::validate() const {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InvalidArgument("beta must be finite and >= 0");
  if (!(dtau > 0.0)) throw InvalidArgument("dtau must be positive");
  if (r < 1) throw InvalidArgument("domain half-width r must be >= 1");
  if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  if (tomography == TomographyMode::kSampled && shots < 1) throw InvalidArgument("shots must be >= 1");
}

Eigen::MatrixXcd LearnedStep::hamiltonian() const {
  return operator_from_coefficients(coefficients, static_cast<int>(domain.size()));
}

Eigen::MatrixXcd LearnedStep::unitary() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hamiltonian());
  Eigen::VectorXcd phases(eig.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(cd(0.0, -dtau * eig.eigenvalues()[i]));
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

LocalOperator outcome_hamiltonian(int q, int m, int num_qubits) {
  if (m != 0 && m != 1) throw InvalidArgument("outcome must be 0 or 1");
  return pauli_z_operator(q, num_qubits, 2.0 * m - 1.0);
}

Subsystem qite_domain(int q, int r, int num_qubits) {
  if (q < 0 || q >= num_qubits) throw InvalidArgument("target qubit out of range");
  if (r < 1) throw InvalidArgument("domain half-width r must be >= 1");
  Subsystem d = ring_neighborhood(q, r, num_qubits);
  if (static_cast<int>(d.size()) > kMaxDomainSize) {
    throw InvalidArgument("domain of " + std::to_string(d.size()) + " qubits exceeds the cap of " +
                          std::to_string(kMaxDomainSize));
  }
  return d;
}

Eigen::MatrixXcd solve_step_generator(const Eigen::MatrixXcd& rho, int q_local, int outcome, double dtau,
                                      double lambda) {
  const Eigen::Index d = rho.rows();
  const Eigen::VectorXd f = target_direction_diagonal(rho, q_local, outcome, dtau);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho);
  const Eigen::MatrixXcd& w = eig.eigenvectors();
  Eigen::VectorXd lam = eig.eigenvalues();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(lam[i]) < kEigenFloor) lam[i] = 0.0;
  }
  // i [F, rho] in the eigenbasis of rho is i F'_{kl} (lam_l - lam_k).
  const Eigen::MatrixXcd fp = w.adjoint() * f.cast<cd>().asDiagonal() * w;
  const double shift = lambda / static_cast<double>(d);
  double max_den = 0.0;
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index l = 0; l < d; ++l) max_den = std::max(max_den, std::abs(lam[k] + lam[l] + shift));
  const double cutoff = kPinvCutoff * max_den;
  Eigen::MatrixXcd ap = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) {
      const double den = lam[k] + lam[l] + shift;
      const cd rhs = cd(0.0, 1.0) * fp(k, l) * (lam[l] - lam[k]);
      if (std::abs(den) > cutoff && rhs != cd(0.0, 0.0)) ap(k, l) = rhs / den;
    }
  }
  Eigen::MatrixXcd a = w * ap * w.adjoint();
  return 0.5 * (a + a.adjoint());
}

Eigen::VectorXd solve_step_coefficients_reference(const Eigen::MatrixXcd& rho, int q_local, int outcome,
                                                  double dtau, double lambda) {
  const auto d = static_cast<std::uint64_t>(rho.rows());
  int k = 0;
  while ((std::uint64_t{1} << k) < d) ++k;
  const std::uint64_t count = pauli_basis_size(k);
  std::vector<Eigen::MatrixXcd> sigma;
  sigma.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) sigma.push_back(pauli_matrix(i, k));
  const Eigen::VectorXd f = target_direction_diagonal(rho, q_local, outcome, dtau);
  const Eigen::MatrixXcd fm = f.cast<cd>().asDiagonal();
  const auto n = static_cast<Eigen::Index>(count);
  Eigen::MatrixXd s(n, n);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::MatrixXcd rs = rho * sigma[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) s(i, j) = (rs * sigma[static_cast<std::size_t>(j)]).trace().real();
    b[i] = 2.0 * (rs * fm).trace().imag();
  }
  const Eigen::MatrixXd sys = s + s.transpose() + lambda * Eigen::MatrixXd::Identity(n, n);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sys);
  cod.setThreshold(kPinvCutoff);
  return cod.solve(-b);
}

Eigen::MatrixXcd tomography(const StateVector& state, const Subsystem& domain, const QiteConfig& config,
                            std::mt19937_64* rng) {
  Eigen::MatrixXcd rho = reduced_density(state, domain, kMaxDomainSize).matrix;
  if (config.tomography == TomographyMode::kExact) return rho;
  if (rng == nullptr) throw InvalidArgument("sampled tomography needs a random generator");
  const int k = static_cast<int>(domain.size());
  Eigen::VectorXd e = pauli_expectations(rho);
  for (Eigen::Index i = 1; i < e.size(); ++i) {
    const double p_plus = std::clamp(0.5 * (1.0 + e[i]), 0.0, 1.0);
    std::binomial_distribution<std::int64_t> shots(config.shots, p_plus);
    e[i] = 2.0 * static_cast<double>(shots(*rng)) / static_cast<double>(config.shots) - 1.0;
  }
  return operator_from_expectations(e, k);
}

QiteStepResult qite_step(const StateVector& state, int q, int m, const QiteConfig& config, std::mt19937_64* rng) {
  config.validate();
  if (m != 0 && m != 1) throw InvalidArgument("outcome must be 0 or 1");
  const Subsystem domain = config.domain ? *config.domain : qite_domain(q, config.r, state.num_qubits());
  if (!domain.contains(q)) throw InvalidArgument("QITE domain must contain the target qubit");
  if (static_cast<int>(domain.size()) > kMaxDomainSize) throw InvalidArgument("QITE domain exceeds the size cap");
  const int q_local = static_cast<int>(std::find(domain.begin(), domain.end(), q) - domain.begin());
  const int k = static_cast<int>(domain.size());

  const Eigen::MatrixXcd rho = tomography(state, domain, config, rng);
  const double weight = outcome_weight(rho, q_local, m);
  if (!(weight > kMinBornWeight)) {
    throw NumericalError("Born weight " + std::to_string(weight) + " of outcome " + std::to_string(m) +
                         " on qubit " + std::to_string(q) + " is too small for imaginary-time evolution");
  }
  const Eigen::MatrixXcd generator = solve_step_generator(rho, q_local, m, config.dtau, config.lambda);
  if (!generator.allFinite()) throw NumericalError("QITE linear solve produced non-finite coefficients");

  LearnedStep step;
  step.domain = domain;
  step.dtau = config.dtau;
  step.coefficients = coefficients_from_operator(generator, k);
  for (Eigen::Index i = 0; i < step.coefficients.size(); ++i) {
    if (std::abs(step.coefficients[i]) <= kCoefficientCutoff) step.coefficients[i] = 0.0;
  }
  const Eigen::MatrixXcd u = step.unitary();
  if (!is_unitary(u, 1e-10)) throw NumericalError("learned step is not unitary within 1e-10");
  StateVector next = state;
  apply_local_matrix(next, u, domain);
  next.normalize();
  return {std::move(step), std::move(next)};
}

PostselectResult deterministic_postselect(const StateVector& state, int q, int m, const QiteConfig& config,
                                          bool track_fidelity, std::uint64_t stream) {
  config.validate();
  const int steps = trotter_steps(config.beta, config.dtau);
  std::mt19937_64 rng = event_rng(config.tomography_seed, StreamPurpose::kTomography, stream);

  std::optional<StateVector> target;
  PostselectResult result{LearnedPostselection{q, m, {}}, state, {}, std::nullopt};
  if (track_fidelity && born_probability(state, q, m) > kZeroProbability) {
    target = state;
    project_z(*target, q, m);
    result.initial_fidelity = fidelity(state, *target);
  }
  result.learned.steps.reserve(static_cast<std::size_t>(steps));
  for (int s = 0; s < steps; ++s) {
    QiteStepResult r = qite_step(result.state, q, m, config, &rng);
    StepDiagnostics diag;
    diag.coefficient_norm = r.step.coefficients.norm();
    result.state = std::move(r.state);
    if (target) diag.target_fidelity = fidelity(result.state, *target);
    result.learned.steps.push_back(std::move(r.step));
    result.diagnostics.push_back(diag);
  }
  return result;
}

void apply_learned(StateVector& state, const LearnedPostselection& learned) {
  for (const auto& step : learned.steps) {
    apply_local_matrix(state, step.unitary(), step.domain);
    state.normalize();
  }
}

}  // namespace mipt
