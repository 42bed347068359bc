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

#include "mipt/dqite/learned_io.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "mipt/dqite/pauli_basis.hpp"
#include "mipt/error.hpp"

namespace mipt {
namespace {

using nlohmann::json;

json encode_step(const LearnedStep& step, int k) {
  json coeffs = json::object();
  for (Eigen::Index i = 0; i < step.coefficients.size(); ++i) {
    const double a = step.coefficients[i];
    if (std::abs(a) > kCoefficientCutoff) coeffs[pauli_index_to_digits(static_cast<std::uint64_t>(i), k)] = a;
  }
  return json{{"coefficients", coeffs}};
}

LearnedPostselection decode_postselection(const json& j) {
  LearnedPostselection lp;
  lp.target_qubit = j.at("target_qubit").get<int>();
  lp.outcome = j.at("outcome").get<int>();
  if (lp.outcome != 0 && lp.outcome != 1) throw MalformedInput("outcome must be 0 or 1");
  const Subsystem domain(j.at("domain").get<std::vector<int>>(), std::numeric_limits<int>::max());
  if (!domain.contains(lp.target_qubit)) throw MalformedInput("domain does not contain the target qubit");
  const int k = static_cast<int>(domain.size());
  if (k > kMaxDomainSize) throw MalformedInput("domain exceeds the size cap");
  const double dtau = j.at("dtau").get<double>();
  if (!(dtau > 0.0) || !std::isfinite(dtau)) throw MalformedInput("dtau must be positive");
  const auto size = static_cast<Eigen::Index>(pauli_basis_size(k));
  for (const auto& js : j.at("steps")) {
    LearnedStep step;
    step.domain = domain;
    step.dtau = dtau;
    step.coefficients = Eigen::VectorXd::Zero(size);
    for (const auto& [key, value] : js.at("coefficients").items()) {
      if (static_cast<int>(key.size()) != k) throw MalformedInput("Pauli key '" + key + "' has the wrong length");
      const double a = value.get<double>();
      if (!std::isfinite(a)) throw MalformedInput("non-finite coefficient");
      step.coefficients[static_cast<Eigen::Index>(pauli_index_from_digits(key))] = a;
    }
    lp.steps.push_back(std::move(step));
  }
  return lp;
}

}  // namespace

std::string serialize_learned(const std::vector<LearnedPostselection>& learned) {
  json list = json::array();
  for (const auto& lp : learned) {
    json entry{{"target_qubit", lp.target_qubit}, {"outcome", lp.outcome}};
    const Subsystem domain = lp.steps.empty() ? Subsystem({lp.target_qubit}, lp.target_qubit + 1) : lp.steps.front().domain;
    const double dtau = lp.steps.empty() ? 1.0 : lp.steps.front().dtau;
    for (const auto& s : lp.steps) {
      if (!(s.domain == domain) || s.dtau != dtau) throw InvalidArgument("learned steps must share domain and dtau");
    }
    entry["domain"] = std::vector<int>(domain.begin(), domain.end());
    entry["dtau"] = dtau;
    json steps = json::array();
    for (const auto& s : lp.steps) steps.push_back(encode_step(s, static_cast<int>(domain.size())));
    entry["steps"] = std::move(steps);
    list.push_back(std::move(entry));
  }
  json doc{{"format_version", kLearnedFormatVersion}, {"postselections", std::move(list)}};
  return doc.dump(1);
}

std::vector<LearnedPostselection> deserialize_learned(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("learned postselection file is not valid JSON: ") + e.what());
  }
  try {
    const int version = doc.at("format_version").get<int>();
    if (version != kLearnedFormatVersion) {
      throw VersionMismatch("learned postselection format_version " + std::to_string(version) + " is not supported");
    }
    std::vector<LearnedPostselection> out;
    for (const auto& j : doc.at("postselections")) out.push_back(decode_postselection(j));
    return out;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("malformed learned postselection file: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw MalformedInput(e.what());
  }
}

}  // namespace mipt
