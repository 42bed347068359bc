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

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace mipt::cli {

using Json = nlohmann::ordered_json;

/// Compact JSON with every float printed to 17 significant digits and
/// non-finite floats written as null.
std::string dump_json(const Json& j, int indent = 2);

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// Expands "start:stop:step" (stop included up to round-off) or a single
/// number. Throws InvalidArgument on malformed text or a nonpositive step.
std::vector<double> parse_grid(const std::string& text);

/// Tracks one command invocation and writes its manifest sidecar.
class RunManifest {
 public:
  RunManifest(std::string command, std::vector<std::string> argv);

  Json& parameters() { return parameters_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void add_output(const std::string& path) { outputs_.push_back(path); }

  /// Writes `<primary output>.manifest.json`.
  void write(const std::string& primary_output) const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  Json parameters_ = Json::object();
  std::uint64_t seed_ = 0;
  std::vector<std::string> outputs_;
  std::chrono::system_clock::time_point started_;
  std::chrono::steady_clock::time_point clock_;
};

}  // namespace mipt::cli
