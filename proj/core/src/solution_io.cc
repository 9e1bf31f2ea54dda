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


#include "multisum/solution_io.h"

#include <fstream>

#include <nlohmann/json.hpp>

#include "multisum/error.h"

namespace multisum {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json ReadJson(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

void WriteJson(const json& doc, const fs::path& path) {
  std::ofstream out(path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("cannot write '" + path.string() + "'");
}

// Runs `parse`, converting nlohmann type errors into InputError that names
// the file.
template <typename Fn>
auto Parse(const fs::path& path, Fn&& parse) {
  try {
    return parse(ReadJson(path));
  } catch (const json::exception& e) {
    throw InputError("unexpected content in '" + path.string() + "': " +
                     e.what());
  }
}

}  // namespace

SolutionRecord MakeSolutionRecord(const VideoCollection& collection,
                                  const CollectionSolution& solution,
                                  const SolverConfig& config) {
  SolutionRecord record;
  record.label = config.diversity_scale == 0.0 ? "baseline" : "diverse";
  for (std::size_t v = 0; v < collection.size(); ++v) {
    const FeatureMatrix& video = collection.video(v);
    Vector norms = RowNorms(solution.coefficients[v].data);
    record.video_ids.push_back(video.video_id());
    record.informative_scores.push_back(
        CountNonzeroRows(norms, config.nonzero_row_tol));
    record.row_norms.push_back(std::move(norms));
    record.segment_lengths.push_back(video.segment_lengths());
  }
  record.objective_trace = solution.objective_trace;
  record.lambdas = solution.lambdas;
  record.update_order = solution.update_order;
  record.sweeps = solution.sweeps;
  record.converged = solution.converged;
  record.nonzero_row_tol = config.nonzero_row_tol;
  return record;
}

RankedList RankSolution(const SolutionRecord& record) {
  return Rank(record.video_ids, record.row_norms, record.segment_lengths,
              record.nonzero_row_tol);
}

void WriteSolution(const SolutionRecord& record, const fs::path& path) {
  json videos = json::array();
  for (std::size_t v = 0; v < record.video_ids.size(); ++v) {
    const Vector& norms = record.row_norms[v];
    videos.push_back(
        {{"id", record.video_ids[v]},
         {"row_norms", std::vector<double>(norms.data(),
                                           norms.data() + norms.size())},
         {"segment_lengths", record.segment_lengths[v]},
         {"informative_score", record.informative_scores[v]}});
  }
  WriteJson({{"label", record.label},
             {"videos", videos},
             {"objective_trace", record.objective_trace},
             {"lambdas", record.lambdas},
             {"update_order", record.update_order},
             {"sweeps", record.sweeps},
             {"converged", record.converged},
             {"nonzero_row_tol", record.nonzero_row_tol}},
            path);
}

SolutionRecord ReadSolution(const fs::path& path) {
  return Parse(path, [&](const json& doc) {
    SolutionRecord record;
    record.label = doc.at("label").get<std::string>();
    for (const json& video : doc.at("videos")) {
      record.video_ids.push_back(video.at("id").get<std::string>());
      const auto norms = video.at("row_norms").get<std::vector<double>>();
      record.row_norms.push_back(
          Eigen::Map<const Vector>(norms.data(),
                                   static_cast<Eigen::Index>(norms.size())));
      record.segment_lengths.push_back(
          video.at("segment_lengths").get<std::vector<int>>());
      record.informative_scores.push_back(
          video.at("informative_score").get<int>());
      if (record.segment_lengths.back().size() != norms.size()) {
        throw InputError("'" + path.string() + "': video '" +
                         record.video_ids.back() +
                         "' has mismatched row norms and lengths");
      }
    }
    if (record.video_ids.empty()) {
      throw InputError("'" + path.string() + "' contains no videos");
    }
    record.objective_trace =
        doc.at("objective_trace").get<std::vector<double>>();
    record.lambdas = doc.at("lambdas").get<std::vector<double>>();
    record.update_order =
        doc.at("update_order").get<std::vector<std::size_t>>();
    record.sweeps = doc.at("sweeps").get<int>();
    record.converged = doc.at("converged").get<bool>();
    record.nonzero_row_tol = doc.at("nonzero_row_tol").get<double>();
    return record;
  });
}

void WriteSummary(const Summary& summary, const fs::path& path) {
  json items = json::array();
  for (const SummaryItem& item : summary.items) {
    items.push_back({{"video", item.video},
                     {"video_index", item.video_index},
                     {"segment", item.segment},
                     {"score", item.score}});
  }
  json budget;
  if (summary.budget.kind == Budget::Kind::kCount) {
    budget = static_cast<int>(summary.budget.value);
  } else {
    budget = summary.budget.value;
  }
  WriteJson({{"budget", budget},
             {"resolved_budget", summary.resolved_budget},
             {"items", items},
             {"warnings", summary.warnings}},
            path);
}

Summary ReadSummary(const fs::path& path) {
  return Parse(path, [&](const json& doc) {
    Summary summary;
    const json& budget = doc.at("budget");
    if (budget.is_number_integer()) {
      summary.budget = Budget::Count(budget.get<int>());
    } else {
      summary.budget = Budget::Fraction(budget.get<double>());
    }
    for (const json& item : doc.at("items")) {
      SummaryItem s;
      s.video = item.at("video").get<std::string>();
      s.video_index = item.value("video_index", std::size_t{0});
      s.segment = item.at("segment").get<int>();
      s.score = item.value("score", 0.0);
      summary.items.push_back(std::move(s));
    }
    summary.resolved_budget =
        doc.value("resolved_budget", static_cast<int>(summary.items.size()));
    summary.warnings =
        doc.value("warnings", std::vector<std::string>{});
    return summary;
  });
}

void WriteGroundTruth(const GroundTruth& truth, const fs::path& path) {
  json annotators = json::array();
  for (const Annotator& a : truth.annotators) {
    json selections = json::array();
    for (const auto& [video, segment] : a.selections) {
      selections.push_back({video, segment});
    }
    annotators.push_back({{"name", a.name}, {"selections", selections}});
  }
  WriteJson({{"annotators", annotators}}, path);
}

GroundTruth ReadGroundTruth(const fs::path& path) {
  return Parse(path, [&](const json& doc) {
    GroundTruth truth;
    for (const json& a : doc.at("annotators")) {
      Annotator annotator;
      annotator.name = a.value("name", "annotator" +
                                   std::to_string(truth.annotators.size()));
      for (const json& sel : a.at("selections")) {
        if (!sel.is_array() || sel.size() != 2) {
          throw InputError("'" + path.string() +
                           "': selections must be [video, segment] pairs");
        }
        const int segment = sel[1].get<int>();
        if (segment < 0) {
          throw InputError("'" + path.string() + "': negative segment index");
        }
        annotator.selections.emplace(sel[0].get<std::string>(), segment);
      }
      truth.annotators.push_back(std::move(annotator));
    }
    return truth;
  });
}

}  // namespace multisum
