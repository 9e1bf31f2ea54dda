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

#ifndef MULTISUM_SYNTHETIC_H_
#define MULTISUM_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "multisum/evaluation.h"
#include "multisum/types.h"

namespace multisum {

// Planted multi-video collection.
//
// Every video holds `prototypes` private prototypes plus `shared_prototypes`
// common to all videos; each prototype appears once verbatim (the planted
// representative, segment length 32). With two or more prototypes per video
// the remaining segments are interior points p + t (centroid - p),
// t ~ U[0.1, 0.4]; with exactly one they are copies of it; with none they
// are i.i.d. N(0, I) background. `duplicates` background segments are drawn
// once and copied into every video. Gaussian noise of standard deviation
// `noise` is then added to every entry. Non-planted segments get lengths in
// [33, 96].
struct SyntheticSpec {
  int videos = 2;
  int segments = 12;  // per video
  int dim = 8;
  int prototypes = 3;
  int shared_prototypes = 0;
  int duplicates = 0;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

enum class SegmentOrigin { kPrototype, kMember, kDuplicate, kBackground };

struct SegmentLabel {
  SegmentOrigin origin = SegmentOrigin::kBackground;
  // Prototype index for kPrototype/kMember (shared prototypes first, then
  // per-video ones offset by video), duplicate index for kDuplicate.
  int source = -1;
};

struct SyntheticCollection {
  VideoCollection collection;
  // One annotator ("planted") selecting the prototype segments of every
  // video; empty when no prototypes are planted.
  GroundTruth ground_truth;
  std::vector<std::vector<SegmentLabel>> labels;
};

// Throws InputError if the planted and duplicated segments do not fit into
// `segments`.
SyntheticCollection GenerateSynthetic(const SyntheticSpec& spec);

}  // namespace multisum

#endif  // MULTISUM_SYNTHETIC_H_
