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

#ifndef MULTISUM_TYPES_H_
#define MULTISUM_TYPES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace multisum {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Column-wise segment descriptors of one video: data is d x n, column i is
// the descriptor of the i-th segment in temporal order.
class FeatureMatrix {
 public:
  // Throws InputError unless d >= 1, n >= 1, every entry is finite and every
  // segment length is >= 1. Empty `segment_lengths` defaults to all ones.
  FeatureMatrix(std::string video_id, Matrix data,
                std::vector<int> segment_lengths = {});

  const std::string& video_id() const { return video_id_; }
  const Matrix& data() const { return data_; }
  const std::vector<int>& segment_lengths() const { return segment_lengths_; }

  Eigen::Index dim() const { return data_.rows(); }
  Eigen::Index num_segments() const { return data_.cols(); }

 private:
  std::string video_id_;
  Matrix data_;
  std::vector<int> segment_lengths_;
};

// A set of related videos sharing one feature space, plus the per-segment
// interestingness scores q^v (uniform ones when the caller has none).
class VideoCollection {
 public:
  // `interestingness` may be empty (uniform prior for every video) or hold
  // one vector per video; an empty vector in that list also means uniform.
  explicit VideoCollection(std::vector<FeatureMatrix> videos,
                           std::vector<Vector> interestingness = {});

  std::size_t size() const { return videos_.size(); }
  Eigen::Index dim() const { return videos_.front().dim(); }
  Eigen::Index total_segments() const;

  const FeatureMatrix& video(std::size_t v) const { return videos_[v]; }
  const std::vector<FeatureMatrix>& videos() const { return videos_; }
  const Vector& interestingness(std::size_t v) const {
    return interestingness_[v];
  }

 private:
  std::vector<FeatureMatrix> videos_;
  std::vector<Vector> interestingness_;
};

// n x n self-expressive coefficients of one video. Nonzero rows mark the
// segments chosen as representatives.
struct CoefficientMatrix {
  Matrix data;
  std::string owner;

  Eigen::Index size() const { return data.rows(); }
};

// Row l2 norms of a coefficient matrix.
Vector RowNorms(const Matrix& z);

// Number of rows whose l2 norm exceeds `relative_tol` times the largest row
// norm. An all-zero matrix has no nonzero rows.
int CountNonzeroRows(const Vector& row_norms, double relative_tol);

enum class LambdaMode {
  kPerVideo,  // lambda_v = lambda_max(X_v) / sparsity_divisor
  kGlobal,    // one lambda = min_v lambda_max(X_v) / sparsity_divisor
};

enum class UpdateOrder {
  kLeastInformativeFirst,
  kMostInformativeFirst,
};

struct SolverConfig {
  // lambda = lambda_max / sparsity_divisor; the usual tuning range is [2, 30].
  double sparsity_divisor = 10.0;
  // Scales the diversity diagonal before it is added to the interestingness
  // diagonal. Zero decouples the videos.
  double diversity_scale = 1.0;
  // ADMM penalty mu.
  double admm_penalty = 1.0;
  // Weight of the appended all-ones row. nullopt selects
  // 1e4 * max|X_v| per video; 0 disables the augmentation.
  std::optional<double> affine_weight;
  double admm_tol = 1e-7;
  int admm_max_iter = 2000;
  double outer_tol = 1e-2;
  int outer_max_sweeps = 50;
  // Relative to the largest row norm of the same matrix.
  double nonzero_row_tol = 1e-3;
  // Gaussian kernel width for cross-video similarity; nullopt = median
  // pairwise distance.
  std::optional<double> bandwidth;
  LambdaMode lambda_mode = LambdaMode::kPerVideo;
  UpdateOrder update_order = UpdateOrder::kLeastInformativeFirst;
  // Worker threads for the row/column-parallel regions. 1 = reference mode.
  int threads = 1;
};

// Throws InputError naming the first violated field. Returns warnings for
// values that are legal but outside the customary tuning range.
std::vector<std::string> ValidateConfig(const SolverConfig& config);

// Resolved affine weight for one video under `config` (0 when disabled).
double ResolveAffineWeight(const SolverConfig& config, const Matrix& features);

}  // namespace multisum

#endif  // MULTISUM_TYPES_H_
