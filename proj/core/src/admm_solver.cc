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


#include "multisum/admm_solver.h"

#include <atomic>
#include <cmath>

#include <Eigen/Cholesky>

#include "multisum/error.h"
#include "multisum/parallel.h"

namespace multisum {
namespace {

std::atomic<std::uint64_t> solve_count{0};

}  // namespace

double LambdaMax(const Matrix& x) {
  if (x.size() == 0 || x.cwiseAbs().maxCoeff() == 0.0) {
    throw InputError("lambda_max is undefined for an all-zero feature matrix");
  }
  // Row i of X^T X is x_i^T X.
  return (x.transpose() * x).rowwise().norm().maxCoeff();
}

Matrix AugmentAffine(const Matrix& x, double affine_weight) {
  if (!(affine_weight > 0.0)) {
    throw InputError("affine_weight must be positive to augment");
  }
  Matrix out(x.rows() + 1, x.cols());
  out.topRows(x.rows()) = x;
  out.row(x.rows()).setConstant(affine_weight);
  return out;
}

Vector ShrinkRow(const Vector& v, double threshold) {
  const double norm = v.norm();
  if (!(norm > threshold) || norm == 0.0) return Vector::Zero(v.size());
  return ((norm - threshold) / norm) * v;
}

double SubproblemObjective(const Matrix& x, const Matrix& z, const Vector& k,
                           double lambda) {
  return 0.5 * (x - x * z).squaredNorm() + lambda * k.dot(RowNorms(z));
}

SubproblemResult AdmmSolve(const Matrix& x, const WeightDiagonal& k,
                           double lambda, const SolverConfig& config,
                           const std::string& owner) {
  solve_count.fetch_add(1, std::memory_order_relaxed);
  const Eigen::Index n = x.cols();
  if (k.size() != n) {
    throw InputError("weight length " + std::to_string(k.size()) +
                     " does not match " + std::to_string(n) + " segments");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InputError("lambda must be positive and finite");
  }
  if ((k.values.array() < 0.0).any() || !k.values.allFinite()) {
    throw InputError("weights must be non-negative and finite");
  }
  const double mu = config.admm_penalty;
  const int threads = config.threads;

  Matrix system = x.transpose() * x;
  system.diagonal().array() += mu;
  const Eigen::LLT<Matrix> factor(system);
  if (factor.info() != Eigen::Success) {
    throw SolverError("factorization of X^T X + mu I failed");
  }
  const Vector thresholds = (lambda / mu) * k.values;

  AdmmState s;
  s.z = Matrix::Zero(n, n);
  s.lambda = Matrix::Zero(n, n);
  s.u = Matrix::Zero(n, n);
  Matrix rhs(n, n);
  bool converged = false;

  // (X^T X + mu I)^-1 (X^T X + mu Z - Lambda) is evaluated as
  // I + (X^T X + mu I)^-1 (mu (Z - I) - Lambda): same value, but the right-hand
  // side stays O(1) when X carries a large affine row, instead of cancelling
  // against it.
  while (s.iteration < config.admm_max_iter) {
    ++s.iteration;
    rhs = mu * s.z - s.lambda;
    rhs.diagonal().array() -= mu;
    if (threads > 1) {
      ParallelFor(static_cast<std::size_t>(n), threads, [&](std::size_t j) {
        const auto c = static_cast<Eigen::Index>(j);
        s.u.col(c) = factor.solve(rhs.col(c));
      });
    } else {
      s.u = factor.solve(rhs);
    }
    s.u.diagonal().array() += 1.0;
    ParallelFor(static_cast<std::size_t>(n), threads, [&](std::size_t r) {
      const auto i = static_cast<Eigen::Index>(r);
      const Vector v = (s.u.row(i) + s.lambda.row(i) / mu).transpose();
      s.z.row(i) = ShrinkRow(v, thresholds[i]).transpose();
      s.lambda.row(i) += mu * (s.u.row(i) - s.z.row(i));
    });
    if (!s.z.allFinite() || !s.lambda.allFinite()) {
      throw SolverError("ADMM iterate became non-finite at iteration " +
                        std::to_string(s.iteration) +
                        (owner.empty() ? "" : " (video '" + owner + "')"));
    }
    s.residual = (s.u - s.z).cwiseAbs().maxCoeff();
    if (s.residual <= config.admm_tol) {
      converged = true;
      break;
    }
  }

  SubproblemResult result;
  result.objective = SubproblemObjective(x, s.z, k.values, lambda);
  result.z = {std::move(s.z), owner};
  result.converged = converged;
  result.iterations = s.iteration;
  result.residual = s.residual;
  return result;
}

std::uint64_t AdmmSolveCount() {
  return solve_count.load(std::memory_order_relaxed);
}

}  // namespace multisum
