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


#include "multisum/collection_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "multisum/error.h"

namespace multisum {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::ifstream OpenForRead(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseDouble(std::string_view token, const fs::path& path, int line) {
  token = Trim(token);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw InputError(path.string() + ":" + std::to_string(line) +
                     ": not a number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw InputError(path.string() + ":" + std::to_string(line) +
                     ": non-finite value");
  }
  return value;
}

// Non-blank lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> ReadLines(const fs::path& path) {
  auto in = OpenForRead(path);
  std::vector<std::pair<int, std::string>> lines;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!Trim(line).empty()) lines.emplace_back(number, line);
  }
  return lines;
}

std::string RequiredString(const json& entry, const char* key) {
  if (!entry.contains(key) || !entry[key].is_string()) {
    throw InputError(std::string("manifest video entry needs string '") + key +
                     "'");
  }
  return entry[key].get<std::string>();
}

void WriteOrThrow(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

}  // namespace

Matrix ReadFeatureCsv(const fs::path& path) {
  const auto lines = ReadLines(path);
  if (lines.empty()) throw InputError("'" + path.string() + "' has no rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(lines.size());
  for (const auto& [number, line] : lines) {
    std::vector<double> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(ParseDouble(rest.substr(0, comma), path, number));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError(path.string() + ":" + std::to_string(number) +
                       ": expected " + std::to_string(rows.front().size()) +
                       " values, found " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  const auto d = static_cast<Eigen::Index>(rows.front().size());
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix x(d, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) x(i, j) = rows[j][i];
  }
  return x;
}

std::vector<int> ReadLengths(const fs::path& path) {
  std::vector<int> lengths;
  for (const auto& [number, line] : ReadLines(path)) {
    const auto token = Trim(line);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError(path.string() + ":" + std::to_string(number) +
                       ": not an integer: '" + std::string(token) + "'");
    }
    lengths.push_back(value);
  }
  return lengths;
}

Vector ReadInterestingness(const fs::path& path) {
  const auto lines = ReadLines(path);
  Vector q(static_cast<Eigen::Index>(lines.size()));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    q[static_cast<Eigen::Index>(i)] =
        ParseDouble(lines[i].second, path, lines[i].first);
  }
  return q;
}

Matrix NormalizeColumns(const Matrix& features) {
  Matrix out = features;
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    const double norm = out.col(j).norm();
    if (norm > 0.0) out.col(j) /= norm;
  }
  return out;
}

VideoCollection LoadCollection(const fs::path& manifest_path) {
  json manifest;
  {
    auto in = OpenForRead(manifest_path);
    try {
      in >> manifest;
    } catch (const json::exception& e) {
      throw InputError("malformed manifest '" + manifest_path.string() +
                       "': " + e.what());
    }
  }
  if (!manifest.is_object() || !manifest.contains("videos") ||
      !manifest["videos"].is_array() || manifest["videos"].empty()) {
    throw InputError("manifest '" + manifest_path.string() +
                     "' needs a non-empty 'videos' array");
  }
  bool normalize = false;
  if (manifest.contains("normalize")) {
    if (!manifest["normalize"].is_boolean()) {
      throw InputError("manifest field 'normalize' must be a boolean");
    }
    normalize = manifest["normalize"].get<bool>();
  }

  const fs::path base = manifest_path.parent_path();
  std::vector<FeatureMatrix> videos;
  std::vector<Vector> interestingness;
  for (const auto& entry : manifest["videos"]) {
    if (!entry.is_object()) {
      throw InputError("manifest video entries must be objects");
    }
    const std::string id = RequiredString(entry, "id");
    Matrix x = ReadFeatureCsv(base / RequiredString(entry, "features_path"));
    if (normalize) x = NormalizeColumns(x);
    std::vector<int> lengths;
    if (entry.contains("lengths_path")) {
      lengths = ReadLengths(base / RequiredString(entry, "lengths_path"));
    }
    Vector q;
    if (entry.contains("interestingness_path")) {
      q = ReadInterestingness(base /
                              RequiredString(entry, "interestingness_path"));
      if (q.size() != x.cols()) {
        throw InputError("video '" + id + "': " + std::to_string(q.size()) +
                         " interestingness scores for " +
                         std::to_string(x.cols()) + " segments");
      }
    }
    videos.emplace_back(id, std::move(x), std::move(lengths));
    interestingness.push_back(std::move(q));
  }
  return VideoCollection(std::move(videos), std::move(interestingness));
}

fs::path WriteCollection(const VideoCollection& collection,
                         const fs::path& directory,
                         const std::string& manifest_name) {
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) {
    throw IoError("cannot create '" + directory.string() + "': " +
                  ec.message());
  }
  json videos = json::array();
  for (std::size_t v = 0; v < collection.size(); ++v) {
    const FeatureMatrix& video = collection.video(v);
    const std::string stem = "video" + std::to_string(v);

    std::ostringstream features;
    features << std::setprecision(std::numeric_limits<double>::max_digits10);
    const Matrix& x = video.data();
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      for (Eigen::Index i = 0; i < x.rows(); ++i) {
        if (i > 0) features << ',';
        features << x(i, j);
      }
      features << '\n';
    }
    WriteOrThrow(directory / (stem + ".csv"), features.str());

    std::ostringstream lengths;
    for (const int length : video.segment_lengths()) lengths << length << '\n';
    WriteOrThrow(directory / (stem + ".lengths"), lengths.str());

    std::ostringstream q;
    q << std::setprecision(std::numeric_limits<double>::max_digits10);
    const Vector& scores = collection.interestingness(v);
    for (Eigen::Index i = 0; i < scores.size(); ++i) q << scores[i] << '\n';
    WriteOrThrow(directory / (stem + ".q"), q.str());

    videos.push_back({{"id", video.video_id()},
                      {"features_path", stem + ".csv"},
                      {"lengths_path", stem + ".lengths"},
                      {"interestingness_path", stem + ".q"}});
  }
  const json manifest = {{"normalize", false}, {"videos", videos}};
  const fs::path manifest_path = directory / manifest_name;
  WriteOrThrow(manifest_path, manifest.dump(2) + "\n");
  return manifest_path;
}

}  // namespace multisum
