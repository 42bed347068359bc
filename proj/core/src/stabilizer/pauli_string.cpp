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

#include "mipt/stabilizer/pauli_string.hpp"

#include <bit>

#include "mipt/error.hpp"

namespace mipt {

int pauli_product_phase(const std::uint64_t* x1, const std::uint64_t* z1, const std::uint64_t* x2,
                        const std::uint64_t* z2, std::size_t words) {
  // Per position: left Y gives z2 - x2, left X gives z2 (2 x2 - 1), left Z
  // gives x2 (1 - 2 z2). Count +1 and -1 contributions separately.
  int total = 0;
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
    const std::uint64_t ly = a & b, lx = a & ~b, lz = ~a & b;
    const std::uint64_t plus = (ly & d & ~c) | (lx & d & c) | (lz & c & ~d);
    const std::uint64_t minus = (ly & c & ~d) | (lx & d & ~c) | (lz & c & d);
    total += std::popcount(plus) - std::popcount(minus);
  }
  return ((total % 4) + 4) % 4;
}

PauliString::PauliString(std::size_t n) : n_(n), xs_(words_for(n), 0), zs_(words_for(n), 0) {}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase += 1;
    text.remove_prefix(1);
  }
  PauliString p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) p.set(q, text[q]);
  p.set_phase(phase);
  return p;
}

void PauliString::set_x(std::size_t q, bool v) {
  const std::uint64_t m = std::uint64_t{1} << (q % 64);
  xs_[q / 64] = v ? (xs_[q / 64] | m) : (xs_[q / 64] & ~m);
}

void PauliString::set_z(std::size_t q, bool v) {
  const std::uint64_t m = std::uint64_t{1} << (q % 64);
  zs_[q / 64] = v ? (zs_[q / 64] | m) : (zs_[q / 64] & ~m);
}

void PauliString::set(std::size_t q, char label) {
  switch (label) {
    case 'I': case '_': set_x(q, false); set_z(q, false); break;
    case 'X': set_x(q, true); set_z(q, false); break;
    case 'Y': set_x(q, true); set_z(q, true); break;
    case 'Z': set_x(q, false); set_z(q, true); break;
    default: throw InvalidArgument(std::string("bad Pauli label '") + label + "'");
  }
}

char PauliString::label(std::size_t q) const {
  static constexpr char kLabels[4] = {'I', 'X', 'Z', 'Y'};
  return kLabels[static_cast<int>(x(q)) | (static_cast<int>(z(q)) << 1)];
}

bool PauliString::commutes(const PauliString& other) const {
  if (other.n_ != n_) throw InvalidArgument("Pauli size mismatch");
  int parity = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    parity ^= std::popcount((xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w])) & 1;
  }
  return parity == 0;
}

std::size_t PauliString::weight() const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) total += std::popcount(xs_[w] | zs_[w]);
  return total;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.n_ != n_) throw InvalidArgument("Pauli size mismatch");
  const int g = pauli_product_phase(xs_.data(), zs_.data(), rhs.xs_.data(), rhs.zs_.data(), xs_.size());
  set_phase(phase_ + rhs.phase_ + g);
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    xs_[w] ^= rhs.xs_[w];
    zs_[w] ^= rhs.zs_[w];
  }
  return *this;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (std::size_t q = 0; q < n_; ++q) out.push_back(label(q));
  return out;
}

}  // namespace mipt
