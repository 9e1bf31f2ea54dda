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


// Independent reference implementations used by the unit and acceptance
// tests. Everything here is written with plain loops and without calling
// into the library's numerical routines, so agreement is meaningful.

#ifndef MULTISUM_TESTS_ORACLES_H_
#define MULTISUM_TESTS_ORACLES_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace multisum::oracle {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// 1/2 ||X - XZ||_F^2 + lambda * sum_i k_i ||z_i||, by explicit loops.
double SubproblemObjective(const Matrix& x, const Matrix& z, const Vector& k,
                           double lambda);

struct SubgradientResult {
  double best_objective;
  Matrix best_z;
};

// Subgradient descent from Z = 0 with step 1 / (L sqrt(t + 1)), L the largest
// eigenvalue of X^T X. Rows at zero use the minimum-norm subgradient, which
// projects the smooth gradient out of the ball of radius lambda k_i. Keeps
// the best iterate.
SubgradientResult SubgradientDescent(const Matrix& x, const Vector& k,
                                     double lambda, int steps);

// max over columns i of ||x_i^T X||, double loop.
double LambdaMax(const Matrix& x);

// exp(-||a_i - b_j||^2 / (2 sigma^2)), double loop.
Matrix GaussianKernel(const Matrix& a, const Matrix& b, double sigma);

// Median of all ||a_i - b_j|| via a full sort.
double MedianDistance(const Matrix& a, const Matrix& b);

// sum_j c_ij ||z_j||, double loop.
Vector DiversityDiagonal(const Matrix& c, const Matrix& z_other);

// Collection objective by nested loops over videos, rows and columns. `c[v][w]` is
// the correlation between videos v and w (v != w); lambdas per video.
double CollectionObjective(const std::vector<Matrix>& x,
                           const std::vector<Matrix>& z,
                           const std::vector<Vector>& q,
                           const std::vector<std::vector<Matrix>>& c,
                           const std::vector<double>& lambdas, double gamma);

// Best value of tr(P^T S) over all permutation matrices P.
double BestPermutationTrace(const Matrix& s);

// Closed-form orthogonal polar factor of a 2x2 matrix with det > 0.
Matrix PolarFactor2x2(const Matrix& s);

// Integer quotas q with sum q = budget and q_v <= cap_v minimising
// sum_v (q_v - ideal_v)^2, ideal = budget * score / sum(score); exhaustive.
// Among equal-cost candidates the one giving more seats to earlier videos
// wins.
std::vector<int> Apportion(const std::vector<int>& scores,
                           const std::vector<int>& caps, int budget);

// Indices sorted by (norm desc, length asc, index asc) using a plain
// selection sort with an exact-tie tolerance.
std::vector<int> RankOrder(const std::vector<double>& norms,
                           const std::vector<int>& lengths, double tie_tol);

// Random matrix with i.i.d. standard normal entries from a seeded engine.
Matrix RandomNormal(int rows, int cols, std::uint64_t seed);

}  // namespace multisum::oracle

#endif  // MULTISUM_TESTS_ORACLES_H_
