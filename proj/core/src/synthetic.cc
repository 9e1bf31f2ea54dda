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


#include "multisum/synthetic.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "multisum/error.h"

namespace multisum {
namespace {

constexpr int kPlantedLength = 32;
constexpr int kMinOtherLength = 33;
constexpr int kMaxOtherLength = 96;

Vector Gaussian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal;
  Vector x(dim);
  for (int i = 0; i < dim; ++i) x[i] = normal(rng);
  return x;
}

struct Segment {
  Vector x;
  int length;
  SegmentLabel label;
};

}  // namespace

SyntheticCollection GenerateSynthetic(const SyntheticSpec& spec) {
  if (spec.videos < 1 || spec.segments < 1 || spec.dim < 1) {
    throw InputError("synthetic spec needs videos, segments and dim >= 1");
  }
  if (spec.prototypes < 0 || spec.shared_prototypes < 0 ||
      spec.duplicates < 0 || !(spec.noise >= 0.0)) {
    throw InputError("synthetic counts and noise must be non-negative");
  }
  const int planted = spec.prototypes + spec.shared_prototypes;
  if (planted + spec.duplicates > spec.segments) {
    throw InputError("more prototypes and duplicates (" +
                     std::to_string(planted + spec.duplicates) +
                     ") than segments per video (" +
                     std::to_string(spec.segments) + ")");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> pull(0.1, 0.4);
  std::uniform_int_distribution<int> other_length(kMinOtherLength,
                                                  kMaxOtherLength);
  std::normal_distribution<double> normal;

  std::vector<Vector> shared;
  for (int k = 0; k < spec.shared_prototypes; ++k) {
    shared.push_back(Gaussian(rng, spec.dim));
  }
  std::vector<Vector> duplicates;
  for (int k = 0; k < spec.duplicates; ++k) {
    duplicates.push_back(Gaussian(rng, spec.dim));
  }

  std::vector<FeatureMatrix> videos;
  std::vector<std::vector<SegmentLabel>> all_labels;
  Annotator truth{"planted", {}};

  for (int v = 0; v < spec.videos; ++v) {
    std::vector<Vector> prototypes = shared;
    std::vector<int> sources(shared.size());
    std::iota(sources.begin(), sources.end(), 0);
    for (int k = 0; k < spec.prototypes; ++k) {
      prototypes.push_back(Gaussian(rng, spec.dim));
      sources.push_back(spec.shared_prototypes + v * spec.prototypes + k);
    }
    Vector centroid = Vector::Zero(spec.dim);
    for (const Vector& p : prototypes) centroid += p;
    if (!prototypes.empty()) centroid /= static_cast<double>(prototypes.size());

    std::vector<Segment> segments;
    for (std::size_t k = 0; k < prototypes.size(); ++k) {
      segments.push_back({prototypes[k], kPlantedLength,
                          {SegmentOrigin::kPrototype, sources[k]}});
    }
    for (int k = 0; k < spec.duplicates; ++k) {
      segments.push_back({duplicates[static_cast<std::size_t>(k)],
                          other_length(rng),
                          {SegmentOrigin::kDuplicate, k}});
    }
    std::uniform_int_distribution<std::size_t> pick(
        0, prototypes.empty() ? 0 : prototypes.size() - 1);
    while (static_cast<int>(segments.size()) < spec.segments) {
      if (prototypes.empty()) {
        segments.push_back({Gaussian(rng, spec.dim), other_length(rng),
                            {SegmentOrigin::kBackground, -1}});
        continue;
      }
      const std::size_t k = pick(rng);
      Vector x = prototypes[k];
      if (prototypes.size() > 1) x += pull(rng) * (centroid - prototypes[k]);
      segments.push_back(
          {std::move(x), other_length(rng), {SegmentOrigin::kMember, sources[k]}});
    }

    std::shuffle(segments.begin(), segments.end(), rng);
    Matrix data(spec.dim, spec.segments);
    std::vector<int> lengths;
    std::vector<SegmentLabel> labels;
    const std::string id = "video" + std::to_string(v);
    for (int i = 0; i < spec.segments; ++i) {
      Segment& s = segments[static_cast<std::size_t>(i)];
      if (spec.noise > 0.0) {
        for (int r = 0; r < spec.dim; ++r) s.x[r] += spec.noise * normal(rng);
      }
      data.col(i) = s.x;
      lengths.push_back(s.length);
      labels.push_back(s.label);
      if (s.label.origin == SegmentOrigin::kPrototype) {
        truth.selections.emplace(id, i);
      }
    }
    videos.emplace_back(id, std::move(data), std::move(lengths));
    all_labels.push_back(std::move(labels));
  }
  GroundTruth ground_truth;
  if (!truth.selections.empty()) {
    ground_truth.annotators.push_back(std::move(truth));
  }
  return {VideoCollection(std::move(videos)), std::move(ground_truth),
          std::move(all_labels)};
}

}  // namespace multisum
