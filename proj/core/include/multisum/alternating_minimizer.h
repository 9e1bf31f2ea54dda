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

#ifndef MULTISUM_ALTERNATING_MINIMIZER_H_
#define MULTISUM_ALTERNATING_MINIMIZER_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "multisum/admm_solver.h"
#include "multisum/correlation.h"
#include "multisum/types.h"

namespace multisum {

// All pairwise correlation matrices of a collection. Only v < w is computed;
// Between(w, v) is the stored transpose of Between(v, w).
class CorrelationSet {
 public:
  CorrelationSet() = default;
  CorrelationSet(const VideoCollection& collection,
                 std::optional<double> bandwidth, int threads = 1);

  std::size_t num_videos() const { return num_videos_; }
  const Matrix& Between(std::size_t v, std::size_t w) const;

 private:
  std::size_t Index(std::size_t v, std::size_t w) const {
    return v * num_videos_ + w;
  }

  std::size_t num_videos_ = 0;
  std::vector<Matrix> matrices_;
};

struct CollectionSolution {
  std::vector<CoefficientMatrix> coefficients;
  // Objective after initialization, then after every sweep.
  std::vector<double> objective_trace;
  std::vector<double> lambdas;
  // Update order used by the sweeps (video indices).
  std::vector<std::size_t> update_order;
  int sweeps = 0;
  bool converged = false;
  // Sweep updates whose ADMM solve hit admm_max_iter.
  int unconverged_subproblems = 0;
};

// Per-video lambda under config.lambda_mode.
std::vector<double> VideoLambdas(const VideoCollection& collection,
                                 const SolverConfig& config);

// Multiplier applied to W^(vw) when forming K^(v) so that the per-video
// subproblem is the exact block of Objective(): (lambda_v + lambda_w) /
// (2 lambda_v).
double PairWeightRatio(const std::vector<double>& lambdas, std::size_t v,
                       std::size_t w);

// sum_v [1/2 ||X_v - X_v Z_v||^2 + lambda_v ||Q_v Z_v||_{2,1}]
//   + gamma * sum_{v<w} (lambda_v + lambda_w)/2 * f_d(Z_v, Z_w)
// with f_d(Z_v, Z_w) = sum_ij ||z^v_i|| c_ij ||z^w_j||. The affine penalty is
// not included.
double Objective(const VideoCollection& collection,
                 const std::vector<CoefficientMatrix>& zs,
                 const CorrelationSet& correlations,
                 const SolverConfig& config);

// Solves every video independently with K = Q (no diversity).
std::vector<CoefficientMatrix> Initialize(const VideoCollection& collection,
                                          const SolverConfig& config);

struct SweepOrder {
  // Descending informativeness (nonzero-row count), ties by lower index.
  std::vector<std::size_t> informativeness;
  // Order in which videos are re-solved during a sweep.
  std::vector<std::size_t> updates;
  std::vector<int> nonzero_rows;
};

SweepOrder ComputeSweepOrder(const std::vector<CoefficientMatrix>& zs,
                             const SolverConfig& config);

// Block coordinate descent over videos. Throws SolverError if the objective
// increases by more than 1e-6 relative between sweeps.
CollectionSolution SolveCollection(const VideoCollection& collection,
                                   const SolverConfig& config);
CollectionSolution SolveCollection(const VideoCollection& collection,
                                   const CorrelationSet& correlations,
                                   const SolverConfig& config);

// Solves one video's subproblem with the given diagonal weights, applying
// the affine augmentation configured in `config`.
SubproblemResult SolveVideo(const FeatureMatrix& video, const Vector& k,
                            double lambda, const SolverConfig& config);

}  // namespace multisum

#endif  // MULTISUM_ALTERNATING_MINIMIZER_H_
