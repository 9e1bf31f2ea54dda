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

#include "multisum/types.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "multisum/error.h"

namespace multisum {

FeatureMatrix::FeatureMatrix(std::string video_id, Matrix data,
                             std::vector<int> segment_lengths)
    : video_id_(std::move(video_id)),
      data_(std::move(data)),
      segment_lengths_(std::move(segment_lengths)) {
  if (data_.rows() < 1 || data_.cols() < 1) {
    throw InputError("video '" + video_id_ +
                     "': feature matrix must have at least one row and column");
  }
  if (!data_.allFinite()) {
    throw InputError("video '" + video_id_ + "': non-finite feature entry");
  }
  if (segment_lengths_.empty()) {
    segment_lengths_.assign(static_cast<std::size_t>(data_.cols()), 1);
  }
  if (static_cast<Eigen::Index>(segment_lengths_.size()) != data_.cols()) {
    std::ostringstream msg;
    msg << "video '" << video_id_ << "': " << segment_lengths_.size()
        << " segment lengths for " << data_.cols() << " segments";
    throw InputError(msg.str());
  }
  for (const int length : segment_lengths_) {
    if (length < 1) {
      throw InputError("video '" + video_id_ +
                       "': segment lengths must be positive");
    }
  }
}

VideoCollection::VideoCollection(std::vector<FeatureMatrix> videos,
                                 std::vector<Vector> interestingness)
    : videos_(std::move(videos)), interestingness_(std::move(interestingness)) {
  if (videos_.empty()) {
    throw InputError("collection must contain at least one video");
  }
  const Eigen::Index d = videos_.front().dim();
  for (const FeatureMatrix& video : videos_) {
    if (video.dim() != d) {
      std::ostringstream msg;
      msg << "dimension mismatch: video '" << video.video_id() << "' has d="
          << video.dim() << " but video '" << videos_.front().video_id()
          << "' has d=" << d;
      throw InputError(msg.str());
    }
  }
  if (interestingness_.empty()) {
    interestingness_.resize(videos_.size());
  }
  if (interestingness_.size() != videos_.size()) {
    throw InputError("interestingness list length does not match video count");
  }
  for (std::size_t v = 0; v < videos_.size(); ++v) {
    Vector& q = interestingness_[v];
    const Eigen::Index n = videos_[v].num_segments();
    if (q.size() == 0) {
      q = Vector::Ones(n);
      continue;
    }
    if (q.size() != n) {
      std::ostringstream msg;
      msg << "video '" << videos_[v].video_id() << "': " << q.size()
          << " interestingness scores for " << n << " segments";
      throw InputError(msg.str());
    }
    if (!q.allFinite() || (q.array() <= 0.0).any()) {
      throw InputError("video '" + videos_[v].video_id() +
                       "': interestingness scores must be positive and finite");
    }
  }
}

Eigen::Index VideoCollection::total_segments() const {
  Eigen::Index total = 0;
  for (const FeatureMatrix& video : videos_) total += video.num_segments();
  return total;
}

Vector RowNorms(const Matrix& z) { return z.rowwise().norm(); }

int CountNonzeroRows(const Vector& row_norms, double relative_tol) {
  if (row_norms.size() == 0) return 0;
  const double max_norm = row_norms.maxCoeff();
  if (!(max_norm > 0.0)) return 0;
  const double cutoff = relative_tol * max_norm;
  return static_cast<int>((row_norms.array() > cutoff).count());
}

std::vector<std::string> ValidateConfig(const SolverConfig& config) {
  auto require = [](bool ok, const char* message) {
    if (!ok) throw InputError(message);
  };
  require(std::isfinite(config.sparsity_divisor) &&
              config.sparsity_divisor > 0.0,
          "sparsity_divisor must be positive");
  require(std::isfinite(config.diversity_scale) &&
              config.diversity_scale >= 0.0,
          "diversity_scale must be non-negative");
  require(std::isfinite(config.admm_penalty) && config.admm_penalty > 0.0,
          "admm_penalty must be positive");
  if (config.affine_weight) {
    require(std::isfinite(*config.affine_weight) && *config.affine_weight >= 0.0,
            "affine_weight must be non-negative");
  }
  require(std::isfinite(config.admm_tol) && config.admm_tol > 0.0,
          "admm_tol must be positive");
  require(config.admm_max_iter >= 1, "admm_max_iter must be at least 1");
  require(std::isfinite(config.outer_tol) && config.outer_tol > 0.0,
          "outer_tol must be positive");
  require(config.outer_max_sweeps >= 1, "outer_max_sweeps must be at least 1");
  require(std::isfinite(config.nonzero_row_tol) && config.nonzero_row_tol > 0.0,
          "nonzero_row_tol must be positive");
  if (config.bandwidth) {
    require(std::isfinite(*config.bandwidth) && *config.bandwidth > 0.0,
            "bandwidth must be positive");
  }
  require(config.threads >= 1, "threads must be at least 1");

  std::vector<std::string> warnings;
  if (config.sparsity_divisor < 2.0 || config.sparsity_divisor > 30.0) {
    std::ostringstream msg;
    msg << "sparsity_divisor " << config.sparsity_divisor
        << " is outside the usual tuning range [2, 30]";
    warnings.push_back(msg.str());
  }
  return warnings;
}

double ResolveAffineWeight(const SolverConfig& config, const Matrix& features) {
  if (config.affine_weight) return *config.affine_weight;
  return 1e4 * features.cwiseAbs().maxCoeff();
}

}  // namespace multisum
