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


// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "multisum/admm_solver.h"
#include "multisum/alternating_minimizer.h"
#include "multisum/correlation.h"
#include "multisum/error.h"
#include "multisum/evaluation.h"
#include "multisum/solution_io.h"
#include "multisum/summary.h"
#include "multisum/synthetic.h"
#include "multisum/weights.h"
#include "oracles.h"

namespace fs = std::filesystem;
using namespace multisum;

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void Report(int id, bool pass, const std::string& what,
            const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string Format(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

SolverConfig NoAffine() {
  SolverConfig config;
  config.affine_weight = 0.0;
  return config;
}

void AdmmMatchesOracle() {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> dim(4, 8), segs(6, 12);
  double worst = 0.0, admm_seconds = 0.0;
  bool ok = true;
  for (int t = 0; t < 25; ++t) {
    const int d = dim(rng), n = segs(rng);
    const Matrix x = oracle::RandomNormal(d, n, 5000 + t);
    const double lambda = oracle::LambdaMax(x) / 10.0;
    const auto start = Clock::now();
    const SubproblemResult r =
        AdmmSolve(x, {Vector::Ones(n)}, lambda, NoAffine());
    admm_seconds += Seconds(start);
    const double mine =
        oracle::SubproblemObjective(x, r.z.data, Vector::Ones(n), lambda);
    const double ref =
        oracle::SubgradientDescent(x, Vector::Ones(n), lambda, 100000)
            .best_objective;
    const double rel = std::abs(mine - ref) / ref;
    worst = std::max(worst, rel);
    ok &= rel <= 1e-4;
  }
  Report(1, ok && admm_seconds < 5.0, "ADMM objective matches subgradient oracle",
         Format("25 instances, worst relative gap %.2e, ADMM time %.3f s",
                worst, admm_seconds));
}

void EmptySelectionBound() {
  int ok = 0;
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Matrix x = oracle::RandomNormal(3 + t % 6, 5 + t % 8, 6000 + t);
    const SubproblemResult r = AdmmSolve(x, {Vector::Ones(x.cols())},
                                         oracle::LambdaMax(x), NoAffine());
    const double largest = RowNorms(r.z.data).maxCoeff();
    worst = std::max(worst, largest);
    ok += largest < 1e-8;
  }
  Report(2, ok == 20, "lambda >= lambda_max selects nothing",
         Format("%d/20, largest row norm %.2e", ok, worst));
}

void AffineColumnSums() {
  bool ok = true;
  double worst = 0.0;
  for (int t = 0; t < 10; ++t) {
    const Matrix x = oracle::RandomNormal(4 + t % 5, 6 + t % 7, 7000 + t);
    const FeatureMatrix video("v", x);
    const SolverConfig config;  // affine weight 1e4 * max|X|
    const SubproblemResult r = SolveVideo(video, Vector::Ones(x.cols()),
                                          LambdaMax(x) / 10.0, config);
    const double dev =
        (r.z.data.colwise().sum().array() - 1.0).abs().maxCoeff();
    worst = std::max(worst, dev);
    ok &= dev < 1e-2;
  }
  Report(3, ok, "affine row drives column sums to one",
         Format("10 instances, max deviation %.2e", worst));
}

void WeightSplitting() {
  std::mt19937_64 rng(8001);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 15;
    Vector w1(n), w2(n);
    for (int i = 0; i < n; ++i) {
      w1[i] = u(rng);
      w2[i] = u(rng);
    }
    const Matrix z = oracle::RandomNormal(n, n, 8100 + t);
    const double whole = WeightedL21Norm(w1 + w2, z);
    const double split = WeightedL21Norm(w1, z) + WeightedL21Norm(w2, z);
    worst = std::max(worst, std::abs(whole - split) / whole);
  }
  Report(4, worst <= 1e-10, "weighted l21 norm splits over diagonal sums",
         Format("100 triples, worst relative gap %.2e", worst));
}

void Monotonicity() {
  int monotone = 0, converged = 0;
  std::string notes;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SyntheticSpec spec;
    spec.videos = 3;
    spec.segments = 12;
    spec.dim = 8;
    spec.prototypes = 3;
    spec.seed = 9000 + seed;
    try {
      const CollectionSolution s =
          SolveCollection(GenerateSynthetic(spec).collection, SolverConfig{});
      bool ok = true;
      for (std::size_t t = 1; t < s.objective_trace.size(); ++t) {
        const double prev = s.objective_trace[t - 1];
        ok &= s.objective_trace[t] <= prev + 1e-6 * std::abs(prev);
      }
      monotone += ok;
      converged += s.converged && s.sweeps <= 10;
    } catch (const SolverError& e) {
      notes += std::string(" seed ") + std::to_string(spec.seed) + ": " + e.what();
    }
  }
  Report(5, monotone == 10 && converged >= 9,
         "block descent never increases the objective",
         Format("monotone %d/10, converged within 10 sweeps %d/10", monotone,
                converged) +
             notes);
}

void TraceMaximisation() {
  double worst = 1e300;
  for (int t = 0; t < 20; ++t) {
    const Matrix s = GaussianSimilarity(oracle::RandomNormal(5, 4, 10000 + t),
                                        oracle::RandomNormal(5, 4, 10100 + t),
                                        std::nullopt)
                         .data;
    const Matrix c = SlhUnclipped(s);
    worst = std::min(worst, (c.transpose() * s).trace() -
                                oracle::BestPermutationTrace(s));
  }
  Report(6, worst >= -1e-10, "correlation maximises the trace over permutations",
         Format("20 matrices, smallest margin %.3e", worst));
}

// Summary items (i from video 0, j from video 1) with c_ij > 0.95.
int DuplicatePairs(const Summary& summary, const Matrix& c) {
  int pairs = 0;
  for (const SummaryItem& a : summary.items) {
    if (a.video_index != 0) continue;
    for (const SummaryItem& b : summary.items) {
      if (b.video_index == 1 && c(a.segment, b.segment) > 0.95) ++pairs;
    }
  }
  return pairs;
}

void DiversityEffect() {
  int not_worse = 0, fewer = 0;
  std::string counts;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SyntheticSpec spec;
    spec.videos = 2;
    spec.segments = 40;
    spec.dim = 5;
    spec.prototypes = 0;
    spec.duplicates = 36;
    spec.seed = 11000 + seed;
    const VideoCollection collection = GenerateSynthetic(spec).collection;
    const CorrelationSet correlations(collection, std::nullopt);
    int pairs[2];
    for (int diverse = 0; diverse < 2; ++diverse) {
      SolverConfig config;
      config.diversity_scale = diverse;
      const CollectionSolution s =
          SolveCollection(collection, correlations, config);
      const SolutionRecord record = MakeSolutionRecord(collection, s, config);
      const Summary summary =
          Summarize(RankSolution(record), Budget::Fraction(0.1));
      pairs[diverse] = DuplicatePairs(summary, correlations.Between(0, 1));
    }
    not_worse += pairs[1] <= pairs[0];
    fewer += pairs[1] < pairs[0];
    counts += Format(" %d/%d", pairs[0], pairs[1]);
  }
  Report(7, not_worse == 10 && fewer >= 7,
         "diversity reduces repeated cross-video segments",
         Format("not worse %d/10, strictly fewer %d/10; pairs without/with:",
                not_worse, fewer) +
             counts);
}

void MetricArithmetic() {
  const double f1 = FMeasure(1.00, 0.77), f2 = FMeasure(0.83, 0.69),
               f3 = FMeasure(1.00, 0.86);
  const bool ok = std::abs(f1 - 0.8691) <= 1e-4 &&
                  std::abs(f2 - 0.7547) <= 1e-4 &&
                  std::abs(f3 - 0.9252) <= 1e-4;
  Report(8, ok, "F-measure arithmetic", Format("%.4f %.4f %.4f", f1, f2, f3));
}

int RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  if (code != cli::kExitOk) {
    std::fprintf(stderr, "%s", err.str().c_str());
  }
  return code;
}

void Rebudgeting(const fs::path& work) {
  const fs::path dir = work / "rebudget";
  fs::create_directories(dir);
  bool ok = RunCli({"synth", "--seed", "12", "--videos", "3", "-o",
                    dir.string()}) == 0 &&
            RunCli({"solve", "--collection", (dir / "collection.json").string(),
                    "-o", (dir / "solution.json").string()}) == 0;
  const std::uint64_t before = AdmmSolveCount();
  std::string sizes;
  for (const char* budget : {"0.05", "0.1", "0.2"}) {
    const fs::path out = dir / (std::string("summary_") + budget + ".json");
    ok &= RunCli({"summarize", "--solution", (dir / "solution.json").string(),
                  "--budget", budget, "-o", out.string()}) == 0;
    if (ok) sizes += " " + std::to_string(ReadSummary(out).items.size());
  }
  const std::uint64_t extra = AdmmSolveCount() - before;
  Report(9, ok && extra == 0, "summaries at new budgets need no solver calls",
         Format("%llu extra solves; summary sizes:",
                static_cast<unsigned long long>(extra)) +
             sizes);
}

void PlantedRecovery(const fs::path& work) {
  const auto start = Clock::now();
  int perfect = 0;
  std::string scores;
  for (int seed = 1; seed <= 5; ++seed) {
    const fs::path dir = work / ("planted" + std::to_string(seed));
    fs::create_directories(dir);
    const bool ran =
        RunCli({"synth", "--seed", std::to_string(seed), "--videos", "3",
                "--prototypes", "1", "--noise", "0", "-o", dir.string()}) == 0 &&
        RunCli({"solve", "--collection", (dir / "collection.json").string(),
                "-o", (dir / "solution.json").string()}) == 0 &&
        RunCli({"summarize", "--solution", (dir / "solution.json").string(),
                "--budget", "3", "-o", (dir / "summary.json").string()}) == 0 &&
        RunCli({"evaluate", "--summary", (dir / "summary.json").string(),
                "--groundtruth", (dir / "groundtruth.json").string()}) == 0;
    if (!ran) {
      scores += " error";
      continue;
    }
    const double f = Score(ReadSummary(dir / "summary.json"),
                           ReadGroundTruth(dir / "groundtruth.json"))
                         .mean_f;
    perfect += f == 1.0;
    scores += Format(" %.4f", f);
  }
  const double elapsed = Seconds(start);
  Report(10, perfect == 5 && elapsed < 10.0, "planted representatives recovered",
         "mean F per seed:" + scores + Format(", %.2f s", elapsed));
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work =
      argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "multisum_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  AdmmMatchesOracle();
  EmptySelectionBound();
  AffineColumnSums();
  WeightSplitting();
  Monotonicity();
  TraceMaximisation();
  DiversityEffect();
  MetricArithmetic();
  Rebudgeting(work);
  PlantedRecovery(work);

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
