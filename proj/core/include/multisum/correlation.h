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

#ifndef MULTISUM_CORRELATION_H_
#define MULTISUM_CORRELATION_H_

#include <cstddef>
#include <optional>

#include "multisum/types.h"

namespace multisum {

// Gaussian-kernel similarities between the segments of two videos.
struct SimilarityMatrix {
  Matrix data;  // n_v x n_w, entries in (0, 1]
  double bandwidth = 0.0;
};

// Cross-video segment correlations c_ij between video `first` (rows) and
// video `second` (columns). Entries are non-negative.
struct CorrelationMatrix {
  Matrix data;
  std::size_t first = 0;
  std::size_t second = 0;
};

// Median of all pairwise distances ||a_i - b_j||.
double MedianPairwiseDistance(const Matrix& a, const Matrix& b);

// s_ij = exp(-||a_i - b_j||^2 / (2 sigma^2)). A missing bandwidth selects the
// median pairwise distance; throws InputError if that median is zero.
SimilarityMatrix GaussianSimilarity(const Matrix& a, const Matrix& b,
                                    std::optional<double> bandwidth);
SimilarityMatrix GaussianSimilarity(const FeatureMatrix& a,
                                    const FeatureMatrix& b,
                                    std::optional<double> bandwidth);

// Orthonormal trace maximizer U * I~ * V^T of `s`, before clipping. Singular
// values below 1e-10 * sigma_max are treated as zero and dropped.
Matrix SlhUnclipped(const Matrix& s);

// SlhUnclipped followed by clipping negative entries to zero.
CorrelationMatrix SlhCorrelation(const SimilarityMatrix& s,
                                 std::size_t first = 0,
                                 std::size_t second = 1);

}  // namespace multisum

#endif  // MULTISUM_CORRELATION_H_
