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

#include "mipt/stabilizer/clifford2q.hpp"

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "mipt/error.hpp"

namespace mipt {
namespace {

constexpr std::uint8_t kGeneratorBits[4] = {0b0001, 0b0010, 0b0100, 0b1000};

std::uint16_t symplectic_key(const std::array<LocalPauli, 4>& images) {
  std::uint16_t key = 0;
  for (int g = 0; g < 4; ++g) key |= static_cast<std::uint16_t>(images[g].bits) << (4 * g);
  return key;
}

std::uint8_t sign_bits(const std::array<LocalPauli, 4>& images) {
  std::uint8_t s = 0;
  for (int g = 0; g < 4; ++g) s |= static_cast<std::uint8_t>(images[g].sign << g);
  return s;
}

std::uint32_t full_key(const std::array<LocalPauli, 4>& images) {
  return (static_cast<std::uint32_t>(symplectic_key(images)) << 4) | sign_bits(images);
}

void fill_from_word(Clifford2Q& c) {
  for (int g = 0; g < 4; ++g) {
    LocalPauli p{kGeneratorBits[g], 0};
    for (CliffordOp op : c.word) p = conjugate(p, op);
    c.images[g] = p;
  }
  for (std::uint8_t b = 0; b < 16; ++b) {
    LocalPauli p{b, 0};
    for (CliffordOp op : c.word) p = conjugate(p, op);
    c.table[b] = p;
  }
}

Eigen::Matrix4cd op_matrix(CliffordOp op) {
  using C = std::complex<double>;
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd one;
  Eigen::Matrix2cd eye = Eigen::Matrix2cd::Identity();
  switch (op) {
    case CliffordOp::kH0:
    case CliffordOp::kH1:
      one << h, h, h, -h;
      break;
    case CliffordOp::kS0:
    case CliffordOp::kS1:
      one << 1, 0, 0, C(0, 1);
      break;
    case CliffordOp::kCX01: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      // |b0 b1> -> |b0, b1 ^ b0>, index b0 + 2 b1.
      for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) m((b0 + 2 * (b1 ^ b0)), b0 + 2 * b1) = 1.0;
      }
      return m;
    }
  }
  Eigen::Matrix4cd m;
  // Kronecker product with qubit 1 as the slow index.
  const bool on_first = (op == CliffordOp::kH0 || op == CliffordOp::kS0);
  const Eigen::Matrix2cd& a = on_first ? eye : one;  // acts on bit 1
  const Eigen::Matrix2cd& b = on_first ? one : eye;  // acts on bit 0
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r0 = 0; r0 < 2; ++r0)
        for (int c0 = 0; c0 < 2; ++c0) m(r0 + 2 * r1, c0 + 2 * c1) = a(r1, c1) * b(r0, c0);
  return m;
}

}  // namespace

LocalPauli conjugate(LocalPauli p, CliffordOp g) {
  auto bit = [&](int k) { return (p.bits >> k) & 1; };
  auto put = [&](int k, int v) {
    p.bits = static_cast<std::uint8_t>((p.bits & ~(1 << k)) | ((v & 1) << k));
  };
  switch (g) {
    case CliffordOp::kH0:
    case CliffordOp::kH1: {
      const int xa = (g == CliffordOp::kH0) ? 0 : 2;
      const int x = bit(xa), z = bit(xa + 1);
      p.sign ^= static_cast<std::uint8_t>(x & z);
      put(xa, z);
      put(xa + 1, x);
      break;
    }
    case CliffordOp::kS0:
    case CliffordOp::kS1: {
      const int xa = (g == CliffordOp::kS0) ? 0 : 2;
      const int x = bit(xa), z = bit(xa + 1);
      p.sign ^= static_cast<std::uint8_t>(x & z);
      put(xa + 1, z ^ x);
      break;
    }
    case CliffordOp::kCX01: {
      const int xc = bit(0), zc = bit(1), xt = bit(2), zt = bit(3);
      p.sign ^= static_cast<std::uint8_t>(xc & zt & (xt ^ zc ^ 1));
      put(2, xt ^ xc);
      put(1, zc ^ zt);
      break;
    }
  }
  return p;
}

Eigen::Matrix4cd Clifford2Q::unitary() const {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  for (CliffordOp op : word) u = op_matrix(op) * u;
  return u;
}

Clifford2QGroup Clifford2QGroup::build() {
  std::unordered_map<std::uint32_t, std::size_t> seen;
  std::vector<Clifford2Q> found;
  std::deque<std::size_t> frontier;

  Clifford2Q id;
  fill_from_word(id);
  seen.emplace(full_key(id.images), 0);
  found.push_back(id);
  frontier.push_back(0);

  constexpr CliffordOp kGens[] = {CliffordOp::kH0, CliffordOp::kH1, CliffordOp::kS0,
                                  CliffordOp::kS1, CliffordOp::kCX01};
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (CliffordOp g : kGens) {
      std::array<LocalPauli, 4> images;
      for (int k = 0; k < 4; ++k) images[k] = conjugate(found[cur].images[k], g);
      const std::uint32_t key = full_key(images);
      if (seen.count(key)) continue;
      Clifford2Q next;
      next.word = found[cur].word;
      next.word.push_back(g);
      fill_from_word(next);
      seen.emplace(key, found.size());
      found.push_back(std::move(next));
      frontier.push_back(found.size() - 1);
    }
  }
  Clifford2QGroup group;
  group.finalize(std::move(found));
  return group;
}

void Clifford2QGroup::finalize(std::vector<Clifford2Q> elements) {
  if (elements.size() != kOrder) {
    throw NumericalError("two-qubit Clifford enumeration produced " + std::to_string(elements.size()) +
                         " elements");
  }
  symplectic_keys_.clear();
  for (const auto& e : elements) symplectic_keys_.push_back(symplectic_key(e.images));
  std::sort(symplectic_keys_.begin(), symplectic_keys_.end());
  symplectic_keys_.erase(std::unique(symplectic_keys_.begin(), symplectic_keys_.end()),
                         symplectic_keys_.end());
  if (symplectic_keys_.size() != kSymplecticOrder) {
    throw NumericalError("unexpected symplectic group order");
  }
  elements_.assign(kOrder, Clifford2Q{});
  std::vector<bool> filled(kOrder, false);
  for (auto& e : elements) {
    const std::uint32_t idx = index_of(e.images);
    if (filled[idx]) throw MalformedInput("duplicate Clifford element in enumeration");
    filled[idx] = true;
    elements_[idx] = std::move(e);
  }
}

std::uint32_t Clifford2QGroup::index_of(const std::array<LocalPauli, 4>& images) const {
  const std::uint16_t key = symplectic_key(images);
  auto it = std::lower_bound(symplectic_keys_.begin(), symplectic_keys_.end(), key);
  if (it == symplectic_keys_.end() || *it != key) {
    throw InvalidArgument("images do not form a symplectic map");
  }
  return static_cast<std::uint32_t>(it - symplectic_keys_.begin()) * 16U + sign_bits(images);
}

std::uint32_t Clifford2QGroup::index_of_word(std::span<const CliffordOp> word) const {
  std::array<LocalPauli, 4> images;
  for (int g = 0; g < 4; ++g) {
    LocalPauli p{kGeneratorBits[g], 0};
    for (CliffordOp op : word) p = conjugate(p, op);
    images[g] = p;
  }
  return index_of(images);
}

std::uint32_t Clifford2QGroup::identity_index() const { return index_of_word({}); }

std::string Clifford2QGroup::to_cache_text() const {
  nlohmann::json j;
  j["format_version"] = 1;
  j["order"] = kOrder;
  auto& words = j["words"] = nlohmann::json::array();
  for (const auto& e : elements_) {
    std::string w;
    for (CliffordOp op : e.word) w.push_back(static_cast<char>('0' + static_cast<int>(op)));
    words.push_back(w);
  }
  return j.dump();
}

Clifford2QGroup Clifford2QGroup::from_cache_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("Clifford cache: ") + e.what());
  }
  if (j.value("format_version", 0) != 1) throw VersionMismatch("Clifford cache version mismatch");
  if (!j.contains("words") || !j["words"].is_array()) throw MalformedInput("Clifford cache: no words");
  if (j["words"].size() != kOrder) throw MalformedInput("Clifford cache: wrong element count");
  std::vector<Clifford2Q> elements;
  for (const auto& w : j["words"]) {
    Clifford2Q c;
    if (!w.is_string()) throw MalformedInput("Clifford cache: word is not a string");
    for (char ch : w.get<std::string>()) {
      if (ch < '0' || ch > '4') throw MalformedInput("Clifford cache: bad gate symbol");
      c.word.push_back(static_cast<CliffordOp>(ch - '0'));
    }
    fill_from_word(c);
    elements.push_back(std::move(c));
  }
  Clifford2QGroup group;
  group.finalize(std::move(elements));
  // Stored order must match the canonical index.
  for (std::uint32_t i = 0; i < kOrder; ++i) {
    std::string w;
    for (CliffordOp op : group.elements_[i].word) w.push_back(static_cast<char>('0' + static_cast<int>(op)));
    if (w != j["words"][i].get<std::string>()) throw MalformedInput("Clifford cache: index order mismatch");
  }
  return group;
}

const Clifford2QGroup& Clifford2QGroup::instance() {
  static const Clifford2QGroup group = [] {
    const char* path = std::getenv("MIPT_TRAJ_CACHE");
    if (path != nullptr && *path != '\0') {
      std::ifstream in(path);
      if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        try {
          return from_cache_text(ss.str());
        } catch (const Error&) {
          // Stale or corrupt; rebuild and overwrite below.
        }
      }
      Clifford2QGroup built = build();
      const std::filesystem::path target(path);
      const std::filesystem::path tmp = target.string() + ".tmp";
      {
        std::ofstream out(tmp);
        out << built.to_cache_text();
      }
      std::error_code ec;
      std::filesystem::rename(tmp, target, ec);
      return built;
    }
    return build();
  }();
  return group;
}

}  // namespace mipt
