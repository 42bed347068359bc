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

#include "mipt/stabilizer/gf2.hpp"

#include <utility>

namespace mipt {

std::size_t rank_gf2(BitMatrix m) {
  const std::size_t stride = m.stride();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(m.row(pivot)[w] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < stride; ++k) std::swap(m.row(pivot)[k], m.row(rank)[k]);
    }
    const std::uint64_t* src = m.row(rank);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      std::uint64_t* dst = m.row(r);
      if (dst[w] & mask) {
        // Words left of w are already zero in the pivot row.
        for (std::size_t k = w; k < stride; ++k) dst[k] ^= src[k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace mipt
