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

#ifndef MULTISUM_EVALUATION_H_
#define MULTISUM_EVALUATION_H_

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "multisum/summary.h"

namespace multisum {

// (video id, segment index)
using SegmentRef = std::pair<std::string, int>;

struct Annotator {
  std::string name;
  std::set<SegmentRef> selections;
};

struct GroundTruth {
  std::vector<Annotator> annotators;
};

struct AnnotatorScore {
  std::string name;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

struct MetricReport {
  std::vector<AnnotatorScore> per_annotator;
  double mean_f = 0.0;
  std::vector<std::string> warnings;
};

// 2PR / (P + R), or 0 when P + R == 0.
double FMeasure(double precision, double recall);

// Exact (video, segment) matching against every annotator, then the
// arithmetic mean of the per-annotator F-measures.
MetricReport Score(const Summary& summary, const GroundTruth& truth);
MetricReport Score(const std::set<SegmentRef>& selected,
                   const GroundTruth& truth);

}  // namespace multisum

#endif  // MULTISUM_EVALUATION_H_
