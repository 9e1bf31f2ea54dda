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


#include "multisum/weights.h"

#include "multisum/error.h"

namespace multisum {

WeightDiagonal InterestingnessWeights(const Vector& q) {
  if (!q.allFinite() || (q.array() <= 0.0).any()) {
    throw InputError("interestingness scores must be positive and finite");
  }
  return {q.cwiseInverse(), WeightKind::kInterestingness};
}

WeightDiagonal DiversityWeights(const Matrix& correlation,
                                const Matrix& z_other) {
  if (correlation.cols() != z_other.rows()) {
    throw InputError("correlation has " + std::to_string(correlation.cols()) +
                     " columns but the other video has " +
                     std::to_string(z_other.rows()) + " segments");
  }
  return {correlation * RowNorms(z_other), WeightKind::kDiversity};
}

WeightDiagonal DiversityWeights(const CorrelationMatrix& correlation,
                                const CoefficientMatrix& z_other) {
  return DiversityWeights(correlation.data, z_other.data);
}

WeightDiagonal CombinedWeights(const WeightDiagonal& interestingness,
                               std::span<const WeightDiagonal> diversity,
                               double diversity_scale) {
  Vector k = interestingness.values;
  for (const WeightDiagonal& w : diversity) {
    if (w.size() != k.size()) {
      throw InputError("diversity weights have length " +
                       std::to_string(w.size()) + ", expected " +
                       std::to_string(k.size()));
    }
    k += diversity_scale * w.values;
  }
  return {std::move(k), WeightKind::kCombined};
}

double L21Norm(const Matrix& z) { return RowNorms(z).sum(); }

double WeightedL21Norm(const Vector& weights, const Matrix& z) {
  if (weights.size() != z.rows()) {
    throw InputError("weight length does not match coefficient rows");
  }
  return weights.dot(RowNorms(z));
}

}  // namespace multisum
