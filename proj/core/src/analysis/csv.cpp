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

#include "mipt/analysis/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mipt {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string mutual_info_csv(const std::vector<MutualInfoCurve>& curves) {
  std::ostringstream out;
  out << "n,L,p,r,stat,value,stderr,n_traj\n";
  for (const auto& c : curves) {
    for (std::size_t j = 0; j < c.r_values.size(); ++j) {
      out << c.n << ',' << c.layers << ',' << format_double(c.p) << ',' << c.r_values[j] << ',' << to_string(c.stat)
          << ',' << format_double(c.values[j]) << ',' << format_double(c.stderrs[j]) << ',' << c.n_traj << '\n';
    }
  }
  return out.str();
}

std::string infidelity_csv(const std::vector<InfidelityRow>& rows) {
  std::ostringstream out;
  out << "n,L,p,r,beta,trajectory_id,infidelity,exact_infidelity,closed_form_infidelity,target_outcome,born_p\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.layers << ',' << format_double(r.p) << ',' << r.r << ',' << format_double(r.beta) << ','
        << r.trajectory_id << ',' << format_double(r.infidelity) << ',' << format_double(r.exact_infidelity) << ','
        << format_double(r.closed_form_infidelity) << ',' << r.target_outcome << ',' << format_double(r.born_p)
        << '\n';
  }
  return out.str();
}

}  // namespace mipt
