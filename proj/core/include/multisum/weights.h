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

#ifndef MULTISUM_WEIGHTS_H_
#define MULTISUM_WEIGHTS_H_

#include <span>

#include "multisum/correlation.h"
#include "multisum/types.h"

namespace multisum {

enum class WeightKind { kInterestingness, kDiversity, kCombined };

// Diagonal of a non-negative diagonal weight matrix.
struct WeightDiagonal {
  Vector values;
  WeightKind kind = WeightKind::kCombined;

  Eigen::Index size() const { return values.size(); }
};

// Q = diag(q)^-1. Throws InputError if any score is not positive.
WeightDiagonal InterestingnessWeights(const Vector& q);

// W_ii = sum_j c_ij * ||z_j||_2 where z_j are the rows of the other video's
// coefficients.
WeightDiagonal DiversityWeights(const Matrix& correlation,
                                const Matrix& z_other);
WeightDiagonal DiversityWeights(const CorrelationMatrix& correlation,
                                const CoefficientMatrix& z_other);

// K = Q + diversity_scale * sum(diversity).
WeightDiagonal CombinedWeights(const WeightDiagonal& interestingness,
                               std::span<const WeightDiagonal> diversity,
                               double diversity_scale);

// sum_i ||z_i||_2
double L21Norm(const Matrix& z);

// ||diag(w) Z||_{2,1} = sum_i w_i ||z_i||_2 for non-negative w.
double WeightedL21Norm(const Vector& weights, const Matrix& z);

}  // namespace multisum

#endif  // MULTISUM_WEIGHTS_H_
