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

#ifndef MULTISUM_SUMMARY_H_
#define MULTISUM_SUMMARY_H_

#include <cstddef>
#include <string>
#include <vector>

#include "multisum/types.h"

namespace multisum {

struct RankedSegment {
  int segment = 0;
  double score = 0.0;  // row l2 norm
};

// Per-video segments in decreasing importance plus the per-video
// informative score (number of nonzero coefficient rows).
struct RankedList {
  std::vector<std::string> video_ids;
  std::vector<std::vector<RankedSegment>> per_video;
  std::vector<int> informative_score;

  std::size_t num_videos() const { return per_video.size(); }
  int total_segments() const;
};

// Requested summary size: either a fraction of all segments or a count.
struct Budget {
  enum class Kind { kFraction, kCount };
  Kind kind = Kind::kFraction;
  double value = 0.1;

  static Budget Fraction(double f) { return {Kind::kFraction, f}; }
  static Budget Count(int n) { return {Kind::kCount, static_cast<double>(n)}; }
};

// "7" -> count, "0.1" -> fraction. Throws InputError for non-positive or
// unparsable values.
Budget ParseBudget(const std::string& text);

// Count budgets pass through; fractions resolve to round(f * total) with
// halves rounded up. Never less than 1.
int ResolveBudget(const Budget& budget, int total_segments);

// Ties in row norm (within 1e-12) go to the shorter segment, then to the
// earlier one.
RankedList Rank(const std::vector<std::string>& video_ids,
                const std::vector<Vector>& row_norms,
                const std::vector<std::vector<int>>& segment_lengths,
                double nonzero_row_tol);
RankedList Rank(const std::vector<CoefficientMatrix>& zs,
                const std::vector<std::vector<int>>& segment_lengths,
                double nonzero_row_tol);

struct Allocation {
  std::vector<int> quotas;
  std::vector<std::string> warnings;
};

// Largest-remainder apportionment of `budget` proportional to the informative
// scores, capped at each video's segment count. Leftover seats go by
// remainder, then informative score, then lower index.
Allocation Allocate(const RankedList& ranked, int budget);

struct SummaryItem {
  std::string video;
  std::size_t video_index = 0;
  int segment = 0;
  double score = 0.0;

  bool operator==(const SummaryItem&) const = default;
};

struct Summary {
  std::vector<SummaryItem> items;
  Budget budget;
  int resolved_budget = 0;
  std::vector<std::string> warnings;
};

// Videos in decreasing informative score (ties by index); each contributes
// its top-quota ranked segments.
Summary Assemble(const RankedList& ranked, const std::vector<int>& quotas,
                 const Budget& budget = {});

// ResolveBudget + Allocate + Assemble.
Summary Summarize(const RankedList& ranked, const Budget& budget);

}  // namespace multisum

#endif  // MULTISUM_SUMMARY_H_
