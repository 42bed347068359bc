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

#include <string>
#include <vector>

#include "mipt/dqite/qite.hpp"

namespace mipt {

inline constexpr int kLearnedFormatVersion = 1;

/// Sparse JSON encoding keyed by base-4 Pauli digit strings; only
/// coefficients with |a| > 1e-12 are written.
std::string serialize_learned(const std::vector<LearnedPostselection>& learned);

/// Throws MalformedInput or VersionMismatch.
std::vector<LearnedPostselection> deserialize_learned(const std::string& text);

}  // namespace mipt
