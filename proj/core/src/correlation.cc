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


#include "multisum/correlation.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/SVD>

#include "multisum/error.h"

namespace multisum {
namespace {

constexpr double kRankCutoff = 1e-10;

// ||a_i - b_j||^2 for all column pairs.
Matrix SquaredDistances(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw InputError("feature dimension mismatch: " + std::to_string(a.rows()) +
                     " vs " + std::to_string(b.rows()));
  }
  Matrix d2(a.cols(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.cols(); ++i) {
      d2(i, j) = (a.col(i) - b.col(j)).squaredNorm();
    }
  }
  return d2;
}

}  // namespace

double MedianPairwiseDistance(const Matrix& a, const Matrix& b) {
  const Matrix d2 = SquaredDistances(a, b);
  std::vector<double> d(d2.data(), d2.data() + d2.size());
  for (double& x : d) x = std::sqrt(x);
  const std::size_t mid = d.size() / 2;
  std::nth_element(d.begin(), d.begin() + mid, d.end());
  double median = d[mid];
  if (d.size() % 2 == 0) {
    median = 0.5 * (median + *std::max_element(d.begin(), d.begin() + mid));
  }
  return median;
}

SimilarityMatrix GaussianSimilarity(const Matrix& a, const Matrix& b,
                                    std::optional<double> bandwidth) {
  double sigma = 0.0;
  if (bandwidth) {
    if (!(*bandwidth > 0.0) || !std::isfinite(*bandwidth)) {
      throw InputError("bandwidth must be positive");
    }
    sigma = *bandwidth;
  } else {
    sigma = MedianPairwiseDistance(a, b);
    if (!(sigma > 0.0)) {
      throw InputError(
          "median pairwise distance is zero; pass an explicit bandwidth");
    }
  }
  const Matrix d2 = SquaredDistances(a, b);
  return {(-d2 / (2.0 * sigma * sigma)).array().exp().matrix(), sigma};
}

SimilarityMatrix GaussianSimilarity(const FeatureMatrix& a,
                                    const FeatureMatrix& b,
                                    std::optional<double> bandwidth) {
  return GaussianSimilarity(a.data(), b.data(), bandwidth);
}

Matrix SlhUnclipped(const Matrix& s) {
  if (!s.allFinite()) throw InputError("similarity matrix has non-finite entries");
  Eigen::JacobiSVD<Matrix> svd(s, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();
  Matrix u = svd.matrixU();
  Matrix v = svd.matrixV();
  Matrix c = Matrix::Zero(s.rows(), s.cols());
  if (sigma.size() == 0 || !(sigma[0] > 0.0)) return c;
  const double cutoff = kRankCutoff * sigma[0];
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (!(sigma[k] > cutoff)) break;
    Eigen::Index arg = 0;
    u.col(k).cwiseAbs().maxCoeff(&arg);
    if (u(arg, k) < 0.0) {
      u.col(k) = -u.col(k);
      v.col(k) = -v.col(k);
    }
    c.noalias() += u.col(k) * v.col(k).transpose();
  }
  return c;
}

CorrelationMatrix SlhCorrelation(const SimilarityMatrix& s, std::size_t first,
                                 std::size_t second) {
  return {SlhUnclipped(s.data).cwiseMax(0.0), first, second};
}

}  // namespace multisum
