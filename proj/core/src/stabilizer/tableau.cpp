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

#include "mipt/stabilizer/tableau.hpp"

#include <string>

#include "mipt/error.hpp"
#include "mipt/stabilizer/clifford2q.hpp"

namespace mipt {
namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw InvalidArgument("qubit " + std::to_string(q) + " out of range");
}

}  // namespace

StabilizerTableau::StabilizerTableau(int num_qubits)
    : n_(num_qubits),
      w_(words_for(static_cast<std::size_t>(num_qubits))),
      xs_((2 * static_cast<std::size_t>(num_qubits) + 1) * w_, 0),
      zs_((2 * static_cast<std::size_t>(num_qubits) + 1) * w_, 0),
      r_(2 * static_cast<std::size_t>(num_qubits) + 1, 0) {
  if (num_qubits < 1) throw InvalidArgument("tableau needs at least one qubit");
  for (int q = 0; q < n_; ++q) {
    xrow(static_cast<std::size_t>(q))[q / 64] |= std::uint64_t{1} << (q % 64);
    zrow(static_cast<std::size_t>(n_ + q))[q / 64] |= std::uint64_t{1} << (q % 64);
  }
}

PauliString StabilizerTableau::row_pauli(std::size_t row) const {
  PauliString p(static_cast<std::size_t>(n_));
  for (int q = 0; q < n_; ++q) {
    p.set_x(static_cast<std::size_t>(q), xb(row, q));
    p.set_z(static_cast<std::size_t>(q), zb(row, q));
  }
  p.set_phase(r_[row] ? 2 : 0);
  return p;
}

void StabilizerTableau::h(int q) {
  check_qubit(q, n_);
  const std::size_t w = static_cast<std::size_t>(q) / 64;
  const std::uint64_t m = std::uint64_t{1} << (q % 64);
  for (std::size_t row = 0; row < 2 * static_cast<std::size_t>(n_); ++row) {
    std::uint64_t& x = xs_[row * w_ + w];
    std::uint64_t& z = zs_[row * w_ + w];
    r_[row] ^= static_cast<std::uint8_t>((x & z & m) != 0);
    const std::uint64_t diff = (x ^ z) & m;
    x ^= diff;
    z ^= diff;
  }
}

void StabilizerTableau::s(int q) {
  check_qubit(q, n_);
  const std::size_t w = static_cast<std::size_t>(q) / 64;
  const std::uint64_t m = std::uint64_t{1} << (q % 64);
  for (std::size_t row = 0; row < 2 * static_cast<std::size_t>(n_); ++row) {
    const std::uint64_t x = xs_[row * w_ + w];
    std::uint64_t& z = zs_[row * w_ + w];
    r_[row] ^= static_cast<std::uint8_t>((x & z & m) != 0);
    z ^= x & m;
  }
}

void StabilizerTableau::x(int q) {
  check_qubit(q, n_);
  for (std::size_t row = 0; row < 2 * static_cast<std::size_t>(n_); ++row) {
    r_[row] ^= static_cast<std::uint8_t>(zb(row, q));
  }
}

void StabilizerTableau::cx(int c, int t) {
  check_qubit(c, n_);
  check_qubit(t, n_);
  if (c == t) throw InvalidArgument("cx needs distinct qubits");
  for (std::size_t row = 0; row < 2 * static_cast<std::size_t>(n_); ++row) {
    const bool xc = xb(row, c), zc = zb(row, c), xt = xb(row, t), zt = zb(row, t);
    r_[row] ^= static_cast<std::uint8_t>(xc && zt && !(xt ^ zc));
    if (xc) xrow(row)[t / 64] ^= std::uint64_t{1} << (t % 64);
    if (zt) zrow(row)[c / 64] ^= std::uint64_t{1} << (c % 64);
  }
}

void StabilizerTableau::apply_local_table(const Clifford2Q& gate, int q0, int q1) {
  const std::size_t w0 = static_cast<std::size_t>(q0) / 64, w1 = static_cast<std::size_t>(q1) / 64;
  const int s0 = q0 % 64, s1 = q1 % 64;
  const std::uint64_t m0 = std::uint64_t{1} << s0, m1 = std::uint64_t{1} << s1;
  for (std::size_t row = 0; row < 2 * static_cast<std::size_t>(n_); ++row) {
    std::uint64_t* x = xs_.data() + row * w_;
    std::uint64_t* z = zs_.data() + row * w_;
    const unsigned bits = static_cast<unsigned>((x[w0] >> s0) & 1U) | static_cast<unsigned>(((z[w0] >> s0) & 1U) << 1) |
                          static_cast<unsigned>(((x[w1] >> s1) & 1U) << 2) |
                          static_cast<unsigned>(((z[w1] >> s1) & 1U) << 3);
    if (bits == 0) continue;
    const LocalPauli out = gate.table[bits];
    r_[row] ^= out.sign;
    x[w0] = (x[w0] & ~m0) | (static_cast<std::uint64_t>(out.bits & 1U) << s0);
    z[w0] = (z[w0] & ~m0) | (static_cast<std::uint64_t>((out.bits >> 1) & 1U) << s0);
    x[w1] = (x[w1] & ~m1) | (static_cast<std::uint64_t>((out.bits >> 2) & 1U) << s1);
    z[w1] = (z[w1] & ~m1) | (static_cast<std::uint64_t>((out.bits >> 3) & 1U) << s1);
  }
}

bool StabilizerTableau::is_deterministic_z(int q) const {
  check_qubit(q, n_);
  for (int i = 0; i < n_; ++i) {
    if (xb(static_cast<std::size_t>(n_ + i), q)) return false;
  }
  return true;
}

void StabilizerTableau::rowsum(std::size_t h, std::size_t i) {
  const std::uint64_t* xi = xs_.data() + i * w_;
  const std::uint64_t* zi = zs_.data() + i * w_;
  std::uint64_t* xh = xs_.data() + h * w_;
  std::uint64_t* zh = zs_.data() + h * w_;
  const int g = pauli_product_phase(xi, zi, xh, zh, w_);
  const int total = (2 * r_[h] + 2 * r_[i] + g) % 4;
  r_[h] = static_cast<std::uint8_t>(total == 2);
  for (std::size_t k = 0; k < w_; ++k) {
    xh[k] ^= xi[k];
    zh[k] ^= zi[k];
  }
}

void StabilizerTableau::copy_row(std::size_t dst, std::size_t src) {
  for (std::size_t k = 0; k < w_; ++k) {
    xs_[dst * w_ + k] = xs_[src * w_ + k];
    zs_[dst * w_ + k] = zs_[src * w_ + k];
  }
  r_[dst] = r_[src];
}

void StabilizerTableau::clear_row(std::size_t row) {
  for (std::size_t k = 0; k < w_; ++k) {
    xs_[row * w_ + k] = 0;
    zs_[row * w_ + k] = 0;
  }
  r_[row] = 0;
}

StabilizerTableau::Collapse StabilizerTableau::collapse_z(int q, int forced, std::mt19937_64* rng) {
  check_qubit(q, n_);
  const std::size_t n = static_cast<std::size_t>(n_);
  std::size_t p = 2 * n;
  for (std::size_t i = n; i < 2 * n; ++i) {
    if (xb(i, q)) {
      p = i;
      break;
    }
  }
  if (p < 2 * n) {
    for (std::size_t i = 0; i < 2 * n; ++i) {
      if (i != p && xb(i, q)) rowsum(i, p);
    }
    copy_row(p - n, p);
    clear_row(p);
    zrow(p)[q / 64] |= std::uint64_t{1} << (q % 64);
    int outcome = forced;
    if (outcome < 0) outcome = static_cast<int>((*rng)() >> 63);
    r_[p] = static_cast<std::uint8_t>(outcome);
    return {outcome, true};
  }
  const std::size_t scratch = 2 * n;
  clear_row(scratch);
  for (std::size_t i = 0; i < n; ++i) {
    if (xb(i, q)) rowsum(scratch, i + n);
  }
  const int outcome = r_[scratch];
  if (forced >= 0 && forced != outcome) {
    throw ImpossibleOutcome("outcome " + std::to_string(forced) + " on qubit " + std::to_string(q) +
                            " has zero probability");
  }
  return {outcome, false};
}

bool StabilizerTableau::check_invariants() const {
  const std::size_t n = static_cast<std::size_t>(n_);
  std::vector<PauliString> rows;
  rows.reserve(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) rows.push_back(row_pauli(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!rows[n + i].commutes(rows[n + j])) return false;
      if (!rows[i].commutes(rows[j])) return false;
      const bool anti = !rows[i].commutes(rows[n + j]);
      if (anti != (i == j)) return false;
    }
  }
  return true;
}

BitMatrix StabilizerTableau::restricted_stabilizers(const Subsystem& region) const {
  BitMatrix m(static_cast<std::size_t>(n_), 2 * region.size());
  for (int i = 0; i < n_; ++i) {
    const std::size_t row = static_cast<std::size_t>(n_ + i);
    for (std::size_t k = 0; k < region.size(); ++k) {
      m.set(static_cast<std::size_t>(i), 2 * k, xb(row, region[k]));
      m.set(static_cast<std::size_t>(i), 2 * k + 1, zb(row, region[k]));
    }
  }
  return m;
}

void apply_clifford_2q(StabilizerTableau& tab, std::uint32_t gate_index, int q0, int q1) {
  if (gate_index >= Clifford2QGroup::kOrder) {
    throw InvalidArgument("Clifford index " + std::to_string(gate_index) + " out of range [0, 11520)");
  }
  if (q0 == q1) throw InvalidArgument("two-qubit gate on equal qubits");
  check_qubit(q0, tab.num_qubits());
  check_qubit(q1, tab.num_qubits());
  tab.apply_local_table(Clifford2QGroup::instance()[gate_index], q0, q1);
}

MeasureResult measure_z(StabilizerTableau& tab, int q, std::mt19937_64& rng) {
  const auto c = tab.collapse_z(q, -1, &rng);
  return {c.outcome, c.random ? 0.5 : 1.0};
}

void force_z(StabilizerTableau& tab, int q, int outcome) {
  if (outcome != 0 && outcome != 1) throw InvalidArgument("outcome must be 0 or 1");
  tab.collapse_z(q, outcome, nullptr);
}

double entropy(const StabilizerTableau& tab, const Subsystem& region) {
  if (region.empty()) return 0.0;
  for (int q : region) check_qubit(q, tab.num_qubits());
  const std::size_t rank = rank_gf2(tab.restricted_stabilizers(region));
  return static_cast<double>(rank) - static_cast<double>(region.size());
}

double mutual_info(const StabilizerTableau& tab, const Subsystem& a, const Subsystem& c) {
  if (!a.disjoint(c)) throw InvalidArgument("mutual_info regions overlap");
  const Subsystem ac = a.united(c, tab.num_qubits());
  return entropy(tab, a) + entropy(tab, c) - entropy(tab, ac);
}

}  // namespace mipt
