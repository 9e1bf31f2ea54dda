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

#ifndef MULTISUM_SOLUTION_IO_H_
#define MULTISUM_SOLUTION_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "multisum/alternating_minimizer.h"
#include "multisum/evaluation.h"
#include "multisum/summary.h"
#include "multisum/types.h"

namespace multisum {

// What `solve` persists: everything summarization needs, so summaries at any
// budget can be produced without touching the features again.
struct SolutionRecord {
  std::string label;  // "diverse" or "baseline" (no diversity term)
  std::vector<std::string> video_ids;
  std::vector<Vector> row_norms;
  std::vector<std::vector<int>> segment_lengths;
  std::vector<int> informative_scores;
  std::vector<double> objective_trace;
  std::vector<double> lambdas;
  std::vector<std::size_t> update_order;
  int sweeps = 0;
  bool converged = false;
  double nonzero_row_tol = 1e-3;
};

SolutionRecord MakeSolutionRecord(const VideoCollection& collection,
                                  const CollectionSolution& solution,
                                  const SolverConfig& config);

// Ranked list reconstructed from the stored row norms.
RankedList RankSolution(const SolutionRecord& record);

// Readers throw InputError for missing or malformed files; writers throw
// IoError.
void WriteSolution(const SolutionRecord& record,
                   const std::filesystem::path& path);
SolutionRecord ReadSolution(const std::filesystem::path& path);

// {"budget": ..., "items": [{"video", "video_index", "segment", "score"}]}
void WriteSummary(const Summary& summary, const std::filesystem::path& path);
Summary ReadSummary(const std::filesystem::path& path);

// {"annotators": [{"name", "selections": [[video, segment], ...]}]}
void WriteGroundTruth(const GroundTruth& truth,
                      const std::filesystem::path& path);
GroundTruth ReadGroundTruth(const std::filesystem::path& path);

}  // namespace multisum

#endif  // MULTISUM_SOLUTION_IO_H_
