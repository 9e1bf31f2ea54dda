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


#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

namespace multisum::oracle {
namespace {

double RowNorm(const Matrix& z, int i) {
  double s = 0.0;
  for (int j = 0; j < z.cols(); ++j) s += z(i, j) * z(i, j);
  return std::sqrt(s);
}

}  // namespace

double SubproblemObjective(const Matrix& x, const Matrix& z, const Vector& k,
                           double lambda) {
  double fit = 0.0;
  for (int r = 0; r < x.rows(); ++r) {
    for (int j = 0; j < x.cols(); ++j) {
      double xz = 0.0;
      for (int i = 0; i < x.cols(); ++i) xz += x(r, i) * z(i, j);
      fit += (x(r, j) - xz) * (x(r, j) - xz);
    }
  }
  double reg = 0.0;
  for (int i = 0; i < z.rows(); ++i) reg += k[i] * RowNorm(z, i);
  return 0.5 * fit + lambda * reg;
}

SubgradientResult SubgradientDescent(const Matrix& x, const Vector& k,
                                     double lambda, int steps) {
  const int n = static_cast<int>(x.cols());
  const Matrix a = x.transpose() * x;
  const double lipschitz =
      Eigen::SelfAdjointEigenSolver<Matrix>(a).eigenvalues().maxCoeff();
  Matrix z = Matrix::Zero(n, n);
  SubgradientResult best{SubproblemObjective(x, z, k, lambda), z};
  Matrix g(n, n);
  for (int t = 0; t < steps; ++t) {
    g.noalias() = a * z - a;
    for (int i = 0; i < n; ++i) {
      const double zn = z.row(i).norm();
      const double radius = lambda * k[i];
      if (zn > 0.0) {
        g.row(i) += radius * z.row(i) / zn;
      } else {
        const double gn = g.row(i).norm();
        if (gn <= radius) {
          g.row(i).setZero();
        } else {
          g.row(i) *= (1.0 - radius / gn);
        }
      }
    }
    z -= g / (lipschitz * std::sqrt(t + 1.0));
    // Cheap objective: 1/2 tr((I - Z)^T A (I - Z)) + reg.
    const Matrix r = Matrix::Identity(n, n) - z;
    const double f = 0.5 * (r.transpose() * a * r).trace() +
                     lambda * k.dot(z.rowwise().norm());
    if (f < best.best_objective) {
      best.best_objective = f;
      best.best_z = z;
    }
  }
  return best;
}

double LambdaMax(const Matrix& x) {
  double best = 0.0;
  for (int i = 0; i < x.cols(); ++i) {
    double s = 0.0;
    for (int j = 0; j < x.cols(); ++j) {
      double dot = 0.0;
      for (int r = 0; r < x.rows(); ++r) dot += x(r, i) * x(r, j);
      s += dot * dot;
    }
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

Matrix GaussianKernel(const Matrix& a, const Matrix& b, double sigma) {
  Matrix s(a.cols(), b.cols());
  for (int i = 0; i < a.cols(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      double d2 = 0.0;
      for (int r = 0; r < a.rows(); ++r) {
        d2 += (a(r, i) - b(r, j)) * (a(r, i) - b(r, j));
      }
      s(i, j) = std::exp(-d2 / (2.0 * sigma * sigma));
    }
  }
  return s;
}

double MedianDistance(const Matrix& a, const Matrix& b) {
  std::vector<double> d;
  for (int i = 0; i < a.cols(); ++i) {
    for (int j = 0; j < b.cols(); ++j) d.push_back((a.col(i) - b.col(j)).norm());
  }
  std::sort(d.begin(), d.end());
  const std::size_t n = d.size();
  return n % 2 == 1 ? d[n / 2] : 0.5 * (d[n / 2 - 1] + d[n / 2]);
}

Vector DiversityDiagonal(const Matrix& c, const Matrix& z_other) {
  Vector w = Vector::Zero(c.rows());
  for (int i = 0; i < c.rows(); ++i) {
    for (int j = 0; j < c.cols(); ++j) w[i] += c(i, j) * RowNorm(z_other, j);
  }
  return w;
}

double CollectionObjective(const std::vector<Matrix>& x,
                           const std::vector<Matrix>& z,
                           const std::vector<Vector>& q,
                           const std::vector<std::vector<Matrix>>& c,
                           const std::vector<double>& lambdas, double gamma) {
  double total = 0.0;
  const std::size_t m = x.size();
  for (std::size_t v = 0; v < m; ++v) {
    Vector inv_q = q[v].cwiseInverse();
    total += SubproblemObjective(x[v], z[v], inv_q, lambdas[v]);
  }
  // Each unordered pair once, weighted by the mean of the two lambdas.
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w = v + 1; w < m; ++w) {
      double fd = 0.0;
      for (int i = 0; i < z[v].rows(); ++i) {
        for (int j = 0; j < z[w].rows(); ++j) {
          fd += RowNorm(z[v], i) * c[v][w](i, j) * RowNorm(z[w], j);
        }
      }
      total += gamma * 0.5 * (lambdas[v] + lambdas[w]) * fd;
    }
  }
  return total;
}

double BestPermutationTrace(const Matrix& s) {
  std::vector<int> perm(static_cast<std::size_t>(s.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  double best = -std::numeric_limits<double>::infinity();
  do {
    double t = 0.0;
    for (int i = 0; i < s.rows(); ++i) t += s(perm[i], i);
    best = std::max(best, t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Matrix PolarFactor2x2(const Matrix& s) {
  const double p = s(0, 0) + s(1, 1);
  const double q = s(1, 0) - s(0, 1);
  const double r = std::hypot(p, q);
  Matrix out(2, 2);
  out << p / r, -q / r, q / r, p / r;
  return out;
}

std::vector<int> Apportion(const std::vector<int>& scores,
                           const std::vector<int>& caps, int budget) {
  const std::size_t m = scores.size();
  const double total = std::accumulate(scores.begin(), scores.end(), 0.0);
  std::vector<double> ideal(m);
  for (std::size_t v = 0; v < m; ++v) ideal[v] = budget * scores[v] / total;
  std::vector<int> current(m, 0), best;
  double best_cost = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, int)> search = [&](std::size_t v, int left) {
    if (v == m) {
      if (left != 0) return;
      double cost = 0.0;
      for (std::size_t u = 0; u < m; ++u) {
        cost += (current[u] - ideal[u]) * (current[u] - ideal[u]);
      }
      if (cost < best_cost - 1e-12) {
        best_cost = cost;
        best = current;
      }
      return;
    }
    for (int q = std::min(left, caps[v]); q >= 0; --q) {
      current[v] = q;
      search(v + 1, left - q);
    }
  };
  search(0, budget);
  return best;
}

std::vector<int> RankOrder(const std::vector<double>& norms,
                           const std::vector<int>& lengths, double tie_tol) {
  std::vector<int> remaining(norms.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> order;
  while (!remaining.empty()) {
    std::size_t pick = 0;
    for (std::size_t c = 1; c < remaining.size(); ++c) {
      const int a = remaining[c];
      const int b = remaining[pick];
      bool better;
      if (std::abs(norms[a] - norms[b]) > tie_tol) {
        better = norms[a] > norms[b];
      } else if (lengths[a] != lengths[b]) {
        better = lengths[a] < lengths[b];
      } else {
        better = a < b;
      }
      if (better) pick = c;
    }
    order.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<long>(pick));
  }
  return order;
}

Matrix RandomNormal(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix out(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) out(i, j) = normal(rng);
  }
  return out;
}

}  // namespace multisum::oracle
