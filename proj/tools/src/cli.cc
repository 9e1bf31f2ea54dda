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


#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "multisum/alternating_minimizer.h"
#include "multisum/collection_io.h"
#include "multisum/error.h"
#include "multisum/evaluation.h"
#include "multisum/solution_io.h"
#include "multisum/summary.h"
#include "multisum/synthetic.h"
#include "multisum/version.h"
#include "run_manifest.h"

namespace multisum::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct SolveOptions {
  std::string collection;
  std::string output = "solution.json";
  std::string manifest;
  std::string bandwidth = "auto";
  std::string update_order = "least-first";
  std::optional<double> affine_weight;
  bool no_affine = false;
  bool global_lambda = false;
  SolverConfig config;
};

struct SummarizeOptions {
  std::string solution;
  std::string budget = "0.1";
  std::string output = "summary.json";
  std::string manifest;
};

struct EvaluateOptions {
  std::string summary;
  std::string groundtruth;
  std::string output;
};

struct SynthOptions {
  std::string output_dir = "synthetic";
  std::optional<std::uint64_t> seed;
  SyntheticSpec spec;
};

RunManifest NewManifest(std::string command) {
  RunManifest manifest;
  manifest.command = std::move(command);
  manifest.version = MULTISUM_VERSION;
  return manifest;
}

std::string DefaultManifestPath(const std::string& explicit_path,
                                const fs::path& output) {
  if (!explicit_path.empty()) return explicit_path;
  fs::path p = output;
  p.replace_extension(".run.json");
  return p.string();
}

json ConfigJson(const SolverConfig& c) {
  json j = {{"sparsity_divisor", c.sparsity_divisor},
            {"diversity_scale", c.diversity_scale},
            {"admm_penalty", c.admm_penalty},
            {"admm_tol", c.admm_tol},
            {"admm_max_iter", c.admm_max_iter},
            {"outer_tol", c.outer_tol},
            {"outer_max_sweeps", c.outer_max_sweeps},
            {"nonzero_row_tol", c.nonzero_row_tol},
            {"lambda_mode",
             c.lambda_mode == LambdaMode::kGlobal ? "global" : "per-video"},
            {"update_order", c.update_order == UpdateOrder::kMostInformativeFirst
                                 ? "most-first"
                                 : "least-first"},
            {"threads", c.threads}};
  j["affine_weight"] = c.affine_weight ? json(*c.affine_weight) : json("auto");
  j["bandwidth"] = c.bandwidth ? json(*c.bandwidth) : json("auto");
  return j;
}

// Feature, length and interestingness files referenced by a manifest.
std::vector<fs::path> ReferencedFiles(const fs::path& manifest_path) {
  std::ifstream in(manifest_path);
  std::vector<fs::path> files;
  const json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object() || !doc.contains("videos")) return files;
  for (const json& v : doc["videos"]) {
    for (const char* key :
         {"features_path", "lengths_path", "interestingness_path"}) {
      if (v.contains(key) && v[key].is_string()) {
        files.push_back(manifest_path.parent_path() / v[key].get<std::string>());
      }
    }
  }
  return files;
}

int CmdSolve(SolveOptions& o, std::ostream& out, std::ostream& err) {
  RunManifest manifest = NewManifest("solve");
  SolverConfig& config = o.config;
  if (o.bandwidth != "auto") {
    try {
      std::size_t used = 0;
      config.bandwidth = std::stod(o.bandwidth, &used);
      if (used != o.bandwidth.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("--bandwidth expects a positive number or 'auto'");
    }
  }
  if (o.update_order == "most-first") {
    config.update_order = UpdateOrder::kMostInformativeFirst;
  } else if (o.update_order != "least-first") {
    throw InputError("--update-order expects 'least-first' or 'most-first'");
  }
  if (o.global_lambda) config.lambda_mode = LambdaMode::kGlobal;
  config.affine_weight = o.no_affine ? std::optional<double>(0.0) : o.affine_weight;
  for (const std::string& w : ValidateConfig(config)) {
    err << "warning: " << w << '\n';
  }
  manifest.config = ConfigJson(config);

  std::optional<VideoCollection> collection;
  {
    PhaseTimer timer(manifest, "load");
    collection.emplace(LoadCollection(o.collection));
    manifest.AddInput(o.collection);
    for (const fs::path& f : ReferencedFiles(o.collection)) manifest.AddInput(f);
  }
  std::optional<CorrelationSet> correlations;
  {
    PhaseTimer timer(manifest, "correlation");
    correlations.emplace(*collection, config.bandwidth, config.threads);
  }
  CollectionSolution solution;
  {
    PhaseTimer timer(manifest, "solve");
    solution = SolveCollection(*collection, *correlations, config);
  }
  const SolutionRecord record =
      MakeSolutionRecord(*collection, solution, config);
  {
    PhaseTimer timer(manifest, "write");
    WriteSolution(record, o.output);
  }
  manifest.outputs.push_back(o.output);
  manifest.Write(DefaultManifestPath(o.manifest, o.output));

  out << "solution (" << record.label << ") written to " << o.output << '\n'
      << "  converged: " << (solution.converged ? "yes" : "no")
      << ", sweeps: " << solution.sweeps << ", objective: "
      << std::setprecision(10) << solution.objective_trace.back() << '\n'
      << "  informative scores:";
  for (std::size_t v = 0; v < record.video_ids.size(); ++v) {
    out << ' ' << record.video_ids[v] << '=' << record.informative_scores[v];
  }
  out << '\n';
  if (solution.unconverged_subproblems > 0) {
    err << "warning: " << solution.unconverged_subproblems
        << " subproblem(s) stopped at --admm-max-iter before reaching "
           "--admm-tol\n";
  }
  return kExitOk;
}

int CmdSummarize(const SummarizeOptions& o, std::ostream& out,
                 std::ostream& err) {
  RunManifest manifest = NewManifest("summarize");
  const Budget budget = ParseBudget(o.budget);
  manifest.config = {{"budget", o.budget}};
  Summary summary;
  {
    PhaseTimer timer(manifest, "summarize");
    const SolutionRecord record = ReadSolution(o.solution);
    manifest.AddInput(o.solution);
    summary = Summarize(RankSolution(record), budget);
  }
  for (const std::string& w : summary.warnings) err << "warning: " << w << '\n';
  WriteSummary(summary, o.output);
  manifest.outputs.push_back(o.output);
  manifest.Write(DefaultManifestPath(o.manifest, o.output));
  out << summary.items.size() << " segments written to " << o.output << '\n';
  return kExitOk;
}

int CmdEvaluate(const EvaluateOptions& o, std::ostream& out,
                std::ostream& err) {
  const Summary summary = ReadSummary(o.summary);
  const GroundTruth truth = ReadGroundTruth(o.groundtruth);
  const MetricReport report = Score(summary, truth);
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';
  out << std::fixed << std::setprecision(4);
  json per_annotator = json::array();
  for (const AnnotatorScore& s : report.per_annotator) {
    out << s.name << ": P=" << s.precision << " R=" << s.recall
        << " F=" << s.f_measure << '\n';
    per_annotator.push_back({{"name", s.name},
                             {"precision", s.precision},
                             {"recall", s.recall},
                             {"f_measure", s.f_measure}});
  }
  out << "mean F " << report.mean_f << '\n';
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    file << json{{"per_annotator", per_annotator}, {"mean_f", report.mean_f}}
                .dump(2)
         << '\n';
    if (!file) throw IoError("cannot write '" + o.output + "'");
  }
  return kExitOk;
}

int CmdSynth(SynthOptions& o, std::ostream& out) {
  RunManifest manifest = NewManifest("synth");
  o.spec.seed = *o.seed;
  manifest.seed = *o.seed;
  manifest.config = {{"videos", o.spec.videos},
                     {"segments", o.spec.segments},
                     {"dim", o.spec.dim},
                     {"prototypes", o.spec.prototypes},
                     {"shared_prototypes", o.spec.shared_prototypes},
                     {"duplicates", o.spec.duplicates},
                     {"noise", o.spec.noise}};
  std::optional<SyntheticCollection> synthetic;
  {
    PhaseTimer timer(manifest, "generate");
    synthetic.emplace(GenerateSynthetic(o.spec));
  }
  const fs::path dir = o.output_dir;
  const fs::path collection_path = WriteCollection(synthetic->collection, dir);
  const fs::path truth_path = dir / "groundtruth.json";
  WriteGroundTruth(synthetic->ground_truth, truth_path);
  manifest.outputs = {collection_path.string(), truth_path.string()};
  manifest.Write(dir / "run.json");
  out << "collection written to " << collection_path.string() << '\n'
      << "ground truth written to " << truth_path.string() << '\n';
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Diversity-aware sparse representative selection for "
               "multi-video summarization"};
  app.set_version_flag("--version", MULTISUM_VERSION);
  app.require_subcommand(1);

  SolveOptions solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Select representatives for a collection");
  solve_cmd->add_option("--collection", solve.collection, "Collection manifest")
      ->required();
  solve_cmd->add_option("-o,--output", solve.output, "Solution file")
      ->capture_default_str();
  solve_cmd->add_option("--manifest", solve.manifest,
                        "Run manifest path (default: output with .run.json extension)");
  solve_cmd->add_option("--alpha", solve.config.sparsity_divisor,
                        "lambda = lambda_max / alpha")
      ->capture_default_str();
  solve_cmd->add_option("--diversity-scale", solve.config.diversity_scale,
                        "Diversity strength; 0 solves the videos independently")
      ->capture_default_str();
  solve_cmd->add_option("--mu", solve.config.admm_penalty, "ADMM penalty")
      ->capture_default_str();
  solve_cmd->add_option("--admm-tol", solve.config.admm_tol)->capture_default_str();
  solve_cmd->add_option("--admm-max-iter", solve.config.admm_max_iter)
      ->capture_default_str();
  solve_cmd->add_option("--outer-tol", solve.config.outer_tol)
      ->capture_default_str();
  solve_cmd->add_option("--outer-max-sweeps", solve.config.outer_max_sweeps)
      ->capture_default_str();
  solve_cmd->add_option("--nonzero-row-tol", solve.config.nonzero_row_tol,
                        "Relative row-norm cutoff for counting selections")
      ->capture_default_str();
  solve_cmd->add_option("--affine-weight", solve.affine_weight,
                        "Weight of the sum-to-one row (default 1e4*max|X|)");
  solve_cmd->add_flag("--no-affine", solve.no_affine,
                      "Disable the sum-to-one augmentation");
  solve_cmd->add_option("--bandwidth", solve.bandwidth,
                        "Gaussian kernel width or 'auto'")
      ->capture_default_str();
  solve_cmd->add_option("--update-order", solve.update_order,
                        "least-first or most-first")
      ->capture_default_str();
  solve_cmd->add_flag("--global-lambda", solve.global_lambda,
                      "Use one lambda for every video");
  solve_cmd->add_option("--threads", solve.config.threads)->capture_default_str();

  SummarizeOptions summarize;
  CLI::App* summarize_cmd =
      app.add_subcommand("summarize", "Build a summary from a solution file");
  summarize_cmd->add_option("--solution", summarize.solution)->required();
  summarize_cmd->add_option("--budget", summarize.budget,
                            "Fraction in (0,1] or a segment count")
      ->capture_default_str();
  summarize_cmd->add_option("-o,--output", summarize.output)
      ->capture_default_str();
  summarize_cmd->add_option("--manifest", summarize.manifest,
                            "Run manifest path (default: output with .run.json extension)");

  EvaluateOptions evaluate;
  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "Score a summary against ground truth");
  evaluate_cmd->add_option("--summary", evaluate.summary)->required();
  evaluate_cmd->add_option("--groundtruth", evaluate.groundtruth)->required();
  evaluate_cmd->add_option("-o,--output", evaluate.output,
                           "Also write the report as JSON");

  SynthOptions synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Generate a planted synthetic collection");
  synth_cmd->add_option("--seed", synth.seed)->required();
  synth_cmd->add_option("-o,--output-dir", synth.output_dir)
      ->capture_default_str();
  synth_cmd->add_option("--videos", synth.spec.videos)->capture_default_str();
  synth_cmd->add_option("--segments", synth.spec.segments,
                        "Segments per video")
      ->capture_default_str();
  synth_cmd->add_option("--dim", synth.spec.dim)->capture_default_str();
  synth_cmd->add_option("--prototypes", synth.spec.prototypes,
                        "Private planted prototypes per video")
      ->capture_default_str();
  synth_cmd->add_option("--shared-prototypes", synth.spec.shared_prototypes)
      ->capture_default_str();
  synth_cmd->add_option("--duplicates", synth.spec.duplicates,
                        "Background segments copied into every video")
      ->capture_default_str();
  synth_cmd->add_option("--noise", synth.spec.noise)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) return CmdSolve(solve, out, err);
    if (summarize_cmd->parsed()) return CmdSummarize(summarize, out, err);
    if (evaluate_cmd->parsed()) return CmdEvaluate(evaluate, out, err);
    if (synth_cmd->parsed()) return CmdSynth(synth, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitInput;
}

}  // namespace multisum::cli
