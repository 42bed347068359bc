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

#include "cli_util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "mipt/analysis/csv.hpp"
#include "mipt/error.hpp"

#ifndef MIPT_VERSION
#define MIPT_VERSION "0.0.0"
#endif

namespace mipt::cli {
namespace {

void dump_into(std::ostringstream& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out << (std::isfinite(v) ? format_double(v) : "null");
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        out << Json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        dump_into(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      out << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out << (scalars && indent >= 0 ? ", " : ",");
        first = false;
        if (!scalars) newline(depth + 1);
        dump_into(out, e, indent, depth + 1);
      }
      if (!scalars) newline(depth);
      out << ']';
      return;
    }
    default:
      out << j.dump();
  }
}

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::ostringstream out;
  dump_into(out, j, indent, 0);
  out << '\n';
  return out.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot move output into place at '" + path + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<double> parse_grid(const std::string& text) {
  const auto parse_number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed grid '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw InvalidArgument("malformed grid '" + text + "'");
    return v;
  };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() != 3) throw InvalidArgument("grid '" + text + "' must be start:stop:step");
  const double start = parse_number(parts[0]);
  const double stop = parse_number(parts[1]);
  const double step = parse_number(parts[2]);
  if (!(step > 0.0)) throw InvalidArgument("grid step must be positive");
  if (stop < start) throw InvalidArgument("grid stop must be >= start");
  const auto count = static_cast<long>(std::floor((stop - start) / step * (1.0 + 1e-12) + 1e-9));
  std::vector<double> out;
  for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

RunManifest::RunManifest(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)),
      argv_(std::move(argv)),
      started_(std::chrono::system_clock::now()),
      clock_(std::chrono::steady_clock::now()) {}

void RunManifest::write(const std::string& primary_output) const {
  Json m = Json::object();
  m["command"] = command_;
  m["argv"] = argv_;
  m["parameters"] = parameters_;
  m["master_seed"] = seed_;
  m["tool_version"] = MIPT_VERSION;
  m["log_convention"] = "natural";
  m["outputs"] = outputs_;
  m["started_at"] = utc_timestamp(started_);
  m["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_).count();
  write_atomic(primary_output + ".manifest.json", dump_json(m));
}

}  // namespace mipt::cli
