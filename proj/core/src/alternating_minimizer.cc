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


#include "multisum/alternating_minimizer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "multisum/admm_solver.h"
#include "multisum/error.h"
#include "multisum/parallel.h"
#include "multisum/weights.h"

namespace multisum {
namespace {

constexpr double kMonotoneSlack = 1e-6;

void CheckShapes(const VideoCollection& collection,
                 const std::vector<CoefficientMatrix>& zs) {
  if (zs.size() != collection.size()) {
    throw InputError("expected " + std::to_string(collection.size()) +
                     " coefficient matrices, got " + std::to_string(zs.size()));
  }
  for (std::size_t v = 0; v < zs.size(); ++v) {
    const Eigen::Index n = collection.video(v).num_segments();
    if (zs[v].data.rows() != n || zs[v].data.cols() != n) {
      throw InputError("coefficients of video '" +
                       collection.video(v).video_id() + "' are not " +
                       std::to_string(n) + "x" + std::to_string(n));
    }
  }
}

}  // namespace

CorrelationSet::CorrelationSet(const VideoCollection& collection,
                               std::optional<double> bandwidth, int threads)
    : num_videos_(collection.size()),
      matrices_(num_videos_ * num_videos_) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 0; v < num_videos_; ++v) {
    for (std::size_t w = v + 1; w < num_videos_; ++w) pairs.emplace_back(v, w);
  }
  ParallelFor(pairs.size(), threads, [&](std::size_t p) {
    const auto [v, w] = pairs[p];
    const SimilarityMatrix s =
        GaussianSimilarity(collection.video(v), collection.video(w), bandwidth);
    matrices_[Index(v, w)] = SlhCorrelation(s, v, w).data;
    matrices_[Index(w, v)] = matrices_[Index(v, w)].transpose();
  });
}

const Matrix& CorrelationSet::Between(std::size_t v, std::size_t w) const {
  if (v >= num_videos_ || w >= num_videos_ || v == w) {
    throw InputError("no correlation between videos " + std::to_string(v) +
                     " and " + std::to_string(w));
  }
  return matrices_[Index(v, w)];
}

std::vector<double> VideoLambdas(const VideoCollection& collection,
                                 const SolverConfig& config) {
  std::vector<double> lambdas;
  for (const FeatureMatrix& video : collection.videos()) {
    lambdas.push_back(LambdaMax(video.data()) / config.sparsity_divisor);
  }
  if (config.lambda_mode == LambdaMode::kGlobal) {
    const double global = *std::min_element(lambdas.begin(), lambdas.end());
    std::fill(lambdas.begin(), lambdas.end(), global);
  }
  return lambdas;
}

double PairWeightRatio(const std::vector<double>& lambdas, std::size_t v,
                       std::size_t w) {
  return (lambdas[v] + lambdas[w]) / (2.0 * lambdas[v]);
}

double Objective(const VideoCollection& collection,
                 const std::vector<CoefficientMatrix>& zs,
                 const CorrelationSet& correlations,
                 const SolverConfig& config) {
  CheckShapes(collection, zs);
  const std::vector<double> lambdas = VideoLambdas(collection, config);
  std::vector<Vector> norms;
  double total = 0.0;
  for (std::size_t v = 0; v < zs.size(); ++v) {
    const Matrix& x = collection.video(v).data();
    const Vector q = InterestingnessWeights(collection.interestingness(v)).values;
    total += SubproblemObjective(x, zs[v].data, q, lambdas[v]);
    norms.push_back(RowNorms(zs[v].data));
  }
  if (config.diversity_scale == 0.0) return total;
  for (std::size_t v = 0; v < zs.size(); ++v) {
    for (std::size_t w = v + 1; w < zs.size(); ++w) {
      const double fd = norms[v].dot(correlations.Between(v, w) * norms[w]);
      total += config.diversity_scale * 0.5 * (lambdas[v] + lambdas[w]) * fd;
    }
  }
  return total;
}

SubproblemResult SolveVideo(const FeatureMatrix& video, const Vector& k,
                            double lambda, const SolverConfig& config) {
  const double affine = ResolveAffineWeight(config, video.data());
  const WeightDiagonal weights{k, WeightKind::kCombined};
  if (affine > 0.0) {
    return AdmmSolve(AugmentAffine(video.data(), affine), weights, lambda,
                     config, video.video_id());
  }
  return AdmmSolve(video.data(), weights, lambda, config, video.video_id());
}

std::vector<CoefficientMatrix> Initialize(const VideoCollection& collection,
                                          const SolverConfig& config) {
  const std::vector<double> lambdas = VideoLambdas(collection, config);
  std::vector<CoefficientMatrix> zs(collection.size());
  // Videos are independent here; each solve then runs single-threaded so
  // the result does not depend on the thread count.
  SolverConfig inner = config;
  inner.threads = collection.size() > 1 ? 1 : config.threads;
  ParallelFor(collection.size(), config.threads, [&](std::size_t v) {
    const Vector q = InterestingnessWeights(collection.interestingness(v)).values;
    zs[v] = SolveVideo(collection.video(v), q, lambdas[v], inner).z;
  });
  return zs;
}

SweepOrder ComputeSweepOrder(const std::vector<CoefficientMatrix>& zs,
                             const SolverConfig& config) {
  SweepOrder order;
  for (const CoefficientMatrix& z : zs) {
    order.nonzero_rows.push_back(
        CountNonzeroRows(RowNorms(z.data), config.nonzero_row_tol));
  }
  order.informativeness.resize(zs.size());
  std::iota(order.informativeness.begin(), order.informativeness.end(), 0);
  std::stable_sort(order.informativeness.begin(), order.informativeness.end(),
                   [&](std::size_t a, std::size_t b) {
                     return order.nonzero_rows[a] > order.nonzero_rows[b];
                   });
  order.updates.resize(zs.size());
  std::iota(order.updates.begin(), order.updates.end(), 0);
  if (config.update_order == UpdateOrder::kLeastInformativeFirst) {
    std::stable_sort(order.updates.begin(), order.updates.end(),
                     [&](std::size_t a, std::size_t b) {
                       return order.nonzero_rows[a] < order.nonzero_rows[b];
                     });
  } else {
    order.updates = order.informativeness;
  }
  return order;
}

CollectionSolution SolveCollection(const VideoCollection& collection,
                                   const SolverConfig& config) {
  ValidateConfig(config);
  const CorrelationSet correlations(collection, config.bandwidth,
                                    config.threads);
  return SolveCollection(collection, correlations, config);
}

CollectionSolution SolveCollection(const VideoCollection& collection,
                                   const CorrelationSet& correlations,
                                   const SolverConfig& config) {
  ValidateConfig(config);
  if (correlations.num_videos() != collection.size()) {
    throw InputError("correlation set does not match the collection");
  }
  CollectionSolution solution;
  solution.lambdas = VideoLambdas(collection, config);
  solution.coefficients = Initialize(collection, config);
  solution.update_order =
      ComputeSweepOrder(solution.coefficients, config).updates;

  std::vector<Vector> interestingness;
  for (std::size_t v = 0; v < collection.size(); ++v) {
    interestingness.push_back(
        InterestingnessWeights(collection.interestingness(v)).values);
  }

  double previous =
      Objective(collection, solution.coefficients, correlations, config);
  solution.objective_trace.push_back(previous);
  const std::size_t m = collection.size();
  while (solution.sweeps < config.outer_max_sweeps) {
    ++solution.sweeps;
    for (const std::size_t v : solution.update_order) {
      std::vector<WeightDiagonal> diversity;
      for (std::size_t w = 0; w < m; ++w) {
        if (w == v) continue;
        WeightDiagonal d = DiversityWeights(correlations.Between(v, w),
                                            solution.coefficients[w].data);
        d.values *= PairWeightRatio(solution.lambdas, v, w);
        diversity.push_back(std::move(d));
      }
      const WeightDiagonal k = CombinedWeights(
          {interestingness[v], WeightKind::kInterestingness}, diversity,
          config.diversity_scale);
      SubproblemResult r = SolveVideo(collection.video(v), k.values,
                                      solution.lambdas[v], config);
      if (!r.converged) ++solution.unconverged_subproblems;
      solution.coefficients[v] = std::move(r.z);
    }
    const double current =
        Objective(collection, solution.coefficients, correlations, config);
    solution.objective_trace.push_back(current);
    const double scale = std::max(std::abs(previous), 1e-300);
    if (current > previous + kMonotoneSlack * scale) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "objective increased from " << previous << " to " << current
          << " in sweep " << solution.sweeps;
      if (solution.unconverged_subproblems > 0) {
        msg << "; " << solution.unconverged_subproblems
            << " subproblem(s) stopped at the ADMM iteration cap, try a "
               "larger admm_max_iter";
      }
      throw SolverError(msg.str());
    }
    const double change = std::abs(current - previous) / scale;
    previous = current;
    if (change < config.outer_tol) {
      solution.converged = true;
      break;
    }
  }
  return solution;
}

}  // namespace multisum
