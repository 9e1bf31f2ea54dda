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

#ifndef MULTISUM_ADMM_SOLVER_H_
#define MULTISUM_ADMM_SOLVER_H_

#include <cstdint>

#include "multisum/types.h"
#include "multisum/weights.h"

namespace multisum {

// Iterates of the ADMM solver for
//
//   min_Z  1/2 ||X - X Z||_F^2 + lambda * sum_i k_i ||z_i||_2
//
// with splitting U = Z and scaled dual Lambda.
struct AdmmState {
  Matrix u;
  Matrix z;
  Matrix lambda;
  int iteration = 0;
  double residual = 0.0;  // ||U - Z||_inf
};

struct SubproblemResult {
  CoefficientMatrix z;
  double objective = 0.0;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
};

// max_i ||x_i^T X||_2. Throws InputError for an all-zero matrix.
double LambdaMax(const Matrix& x);

// Returns [X; w * 1^T], the (d+1) x n matrix whose reconstruction error adds
// w^2 ||1^T - 1^T Z||^2 and so pushes column sums of Z toward one.
Matrix AugmentAffine(const Matrix& x, double affine_weight);

// Block soft-thresholding: max(||v|| - threshold, 0) * v / ||v||, with the
// zero vector mapped to zero.
Vector ShrinkRow(const Vector& v, double threshold);

// 1/2 ||X - X Z||_F^2 + lambda * ||diag(k) Z||_{2,1}
double SubproblemObjective(const Matrix& x, const Matrix& z, const Vector& k,
                           double lambda);

// Runs ADMM from Z = Lambda = 0 until ||U - Z||_inf <= config.admm_tol or
// config.admm_max_iter iterations. X^T X + mu I is factored once. Throws
// SolverError if an iterate becomes non-finite. `x` may be an augmented
// matrix; the reported objective is evaluated on `x` as given.
SubproblemResult AdmmSolve(const Matrix& x, const WeightDiagonal& k,
                           double lambda, const SolverConfig& config,
                           const std::string& owner = {});

// Number of AdmmSolve invocations in this process.
std::uint64_t AdmmSolveCount();

}  // namespace multisum

#endif  // MULTISUM_ADMM_SOLVER_H_
