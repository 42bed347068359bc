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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mipt {

/// Dense bit matrix with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const { return (words_[r * stride_ + c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = words_[r * stride_ + c / 64];
    const std::uint64_t m = std::uint64_t{1} << (c % 64);
    w = v ? (w | m) : (w & ~m);
  }

  std::uint64_t* row(std::size_t r) { return words_.data() + r * stride_; }
  const std::uint64_t* row(std::size_t r) const { return words_.data() + r * stride_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row rank over GF(2). Gaussian elimination on packed rows; the argument
/// is consumed as scratch space.
std::size_t rank_gf2(BitMatrix matrix);

}  // namespace mipt
