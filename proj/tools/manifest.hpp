// Copyright 2026 The stabkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <ctime>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabkit/version.hpp"

namespace stabkit::cli {

inline std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Every run that produces files drops a manifest next to them so the data
/// behind any figure can be regenerated from one command line.
struct RunManifest {
  std::string subcommand;
  nlohmann::json parameters;
  std::uint64_t seed = 0;
  std::string started_at;
  std::string finished_at;
  std::vector<std::string> outputs;

  std::string path_for(const std::string &primary_output) const {
    return primary_output + ".manifest.json";
  }

  void write(const std::string &path) const {
    nlohmann::json j = {
        {"subcommand", subcommand}, {"parameters", parameters},
        {"seed", seed},             {"tool_version", std::string(kVersion)},
        {"started_at", started_at}, {"finished_at", finished_at},
        {"outputs", outputs},
    };
    std::ofstream out(path);
    out << j.dump(2) << '\n';
  }
};

}  // namespace stabkit::cli
