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

#include "mipt/analysis/infidelity.hpp"
#include "mipt/analysis/mutual_info.hpp"

namespace mipt {

/// printf("%.17g"); non-finite values print as nan, inf or -inf.
std::string format_double(double x);

/// Header n,L,p,r,stat,value,stderr,n_traj; one row per (curve, r).
std::string mutual_info_csv(const std::vector<MutualInfoCurve>& curves);

/// Header n,L,p,r,beta,trajectory_id,infidelity,exact_infidelity,closed_form_infidelity,target_outcome,born_p.
std::string infidelity_csv(const std::vector<InfidelityRow>& rows);

}  // namespace mipt
