// Copyright 2026 The multisum Authors
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


#ifndef MULTISUM_TOOLS_RUN_MANIFEST_H_
#define MULTISUM_TOOLS_RUN_MANIFEST_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace multisum::cli {

// Hex SHA-256 of a file's bytes. Throws InputError if it cannot be read.
std::string Sha256File(const std::filesystem::path& path);

// Record of one command invocation: enough to re-run it and to check that
// the inputs are the same files.
struct RunManifest {
  std::string command;
  std::string version;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
  std::vector<std::string> outputs;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, double>> timings;  // phase, seconds

  void AddInput(const std::filesystem::path& path);
  nlohmann::json ToJson() const;
  void Write(const std::filesystem::path& path) const;
};

// Adds the elapsed wall time to `manifest` under `phase` when destroyed.
class PhaseTimer {
 public:
  PhaseTimer(RunManifest& manifest, std::string phase)
      : manifest_(manifest),
        phase_(std::move(phase)),
        start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start_;
    manifest_.timings.emplace_back(phase_, elapsed.count());
  }
  PhaseTimer(const PhaseTimer&) = delete;
  PhaseTimer& operator=(const PhaseTimer&) = delete;

 private:
  RunManifest& manifest_;
  std::string phase_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace multisum::cli

#endif  // MULTISUM_TOOLS_RUN_MANIFEST_H_
