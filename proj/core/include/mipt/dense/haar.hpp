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

#include <random>

#include <Eigen/Core>

namespace mipt {

/// Haar-random dim x dim unitary: complex Ginibre matrix, Householder QR,
/// then Q * diag(R_ii / |R_ii|) so the distribution is exactly Haar.
Eigen::MatrixXcd haar_unitary(int dim, std::mt19937_64& rng);

inline Eigen::Matrix4cd haar_2q(std::mt19937_64& rng) { return haar_unitary(4, rng); }

}  // namespace mipt
