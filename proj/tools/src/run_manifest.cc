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


#include "run_manifest.h"

#include <array>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

#include "multisum/error.h"

namespace multisum::cli {

std::string Sha256File(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw IoError("cannot initialise SHA-256");
  }
  std::array<char, 1 << 16> buffer;
  while (in) {
    in.read(buffer.data(), buffer.size());
    EVP_DigestUpdate(ctx.get(), buffer.data(),
                     static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest;
  unsigned int size = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &size);
  std::ostringstream hex;
  for (unsigned int i = 0; i < size; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  }
  return hex.str();
}

void RunManifest::AddInput(const std::filesystem::path& path) {
  inputs.emplace_back(path.string(), Sha256File(path));
}

nlohmann::json RunManifest::ToJson() const {
  nlohmann::json doc = {{"command", command},
                        {"version", version},
                        {"config", config},
                        {"outputs", outputs}};
  doc["inputs"] = nlohmann::json::array();
  for (const auto& [path, digest] : inputs) {
    doc["inputs"].push_back({{"path", path}, {"sha256", digest}});
  }
  doc["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  doc["timings"] = nlohmann::json::object();
  for (const auto& [phase, seconds] : timings) doc["timings"][phase] = seconds;
  return doc;
}

void RunManifest::Write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  out << ToJson().dump(2) << '\n';
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

}  // namespace multisum::cli
