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


#include "multisum/evaluation.h"

#include <algorithm>
#include <iterator>

namespace multisum {

double FMeasure(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

MetricReport Score(const std::set<SegmentRef>& selected,
                   const GroundTruth& truth) {
  MetricReport report;
  if (selected.empty()) {
    report.warnings.push_back("empty summary: precision reported as 0");
  }
  if (truth.annotators.empty()) {
    report.warnings.push_back("ground truth has no annotators");
    return report;
  }
  double f_sum = 0.0;
  for (const Annotator& annotator : truth.annotators) {
    std::vector<SegmentRef> common;
    std::set_intersection(selected.begin(), selected.end(),
                          annotator.selections.begin(),
                          annotator.selections.end(),
                          std::back_inserter(common));
    const double hits = static_cast<double>(common.size());
    AnnotatorScore s;
    s.name = annotator.name;
    s.precision = selected.empty() ? 0.0 : hits / selected.size();
    if (annotator.selections.empty()) {
      report.warnings.push_back("annotator '" + annotator.name +
                                "' selected nothing: recall reported as 0");
    } else {
      s.recall = hits / annotator.selections.size();
    }
    s.f_measure = FMeasure(s.precision, s.recall);
    f_sum += s.f_measure;
    report.per_annotator.push_back(std::move(s));
  }
  report.mean_f = f_sum / truth.annotators.size();
  return report;
}

MetricReport Score(const Summary& summary, const GroundTruth& truth) {
  std::set<SegmentRef> selected;
  for (const SummaryItem& item : summary.items) {
    selected.emplace(item.video, item.segment);
  }
  return Score(selected, truth);
}

}  // namespace multisum
