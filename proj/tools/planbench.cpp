// planbench: dataset generation, role evaluation and reporting for the two
// planning environments. See README.md for usage walkthroughs.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "planbench/harness/report.hpp"
#include "planbench/harness/runner.hpp"

namespace {

using planbench::harness::ExperimentConfig;

// Config file first, explicit flags second.
ExperimentConfig load_base_config(const std::string& config_path) {
  if (config_path.empty()) return {};
  std::ifstream in(config_path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + config_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ValidationError("--config", std::string("bad JSON: ") + e.what());
  }
  return ExperimentConfig::from_json(j);
}

struct CommonFlags {
  std::string config_path;
  std::string agent;
  std::string mode;
  std::string out;
  std::string dataset;
  std::string data_dir;
  std::uint64_t seed = 0;
  int n = 0;
  int parallelism = 0;
  bool deterministic = false;
  std::string endpoint_url, model, api_key_env;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file (flags override)");
  cmd->add_option("--agent", flags.agent,
                  "endpoint | scripted:oracle | scripted:random | scripted:hillclimb | "
                  "scripted:zero");
  cmd->add_option("--seed", flags.seed, "master seed");
  cmd->add_option("--out", flags.out, "output JSONL path");
  cmd->add_option("-n,--instances", flags.n, "number of task instances");
  cmd->add_option("--parallelism", flags.parallelism, "concurrent instances");
  cmd->add_flag("--deterministic", flags.deterministic,
                "zero wall-time/timestamp fields for byte-reproducible output");
  cmd->add_option("--data-dir", flags.data_dir, "prompt/bank data directory");
  cmd->add_option("--endpoint-url", flags.endpoint_url, "chat endpoint base URL");
  cmd->add_option("--model", flags.model, "model name sent to the endpoint");
  cmd->add_option("--api-key-env", flags.api_key_env,
                  "environment variable holding the API key");
}

void apply_common(const CLI::App* cmd, const CommonFlags& flags, ExperimentConfig& config) {
  if (cmd->count("--agent")) config.agent = flags.agent;
  if (cmd->count("--seed")) config.seed = flags.seed;
  if (cmd->count("--out")) config.output_path = flags.out;
  if (cmd->count("-n")) config.n_instances = flags.n;
  if (cmd->count("--parallelism")) config.parallelism = flags.parallelism;
  if (cmd->count("--deterministic")) config.deterministic_output = true;
  if (cmd->count("--data-dir")) config.data_dir = flags.data_dir;
  if (cmd->count("--endpoint-url")) config.endpoint.base_url = flags.endpoint_url;
  if (cmd->count("--model")) config.endpoint.model_name = flags.model;
  if (cmd->count("--api-key-env")) config.endpoint.api_key_env = flags.api_key_env;
}

int run_and_print(const ExperimentConfig& config) {
  const auto summary = planbench::harness::run_experiment(config);
  std::cout << "wrote " << summary.written << " record(s) to " << summary.output_path;
  if (summary.skipped > 0) std::cout << " (" << summary.skipped << " already present)";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"benchmark engine for planning-task agent evaluation"};
  app.require_subcommand(1);

  // --- generate ---
  auto* generate = app.add_subcommand("generate", "produce a course dataset");
  std::string gen_difficulty = "easy";
  int gen_count = 400;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "dataset";
  generate->add_option("--difficulty", gen_difficulty, "easy | medium | hard")
      ->check(CLI::IsMember({"easy", "medium", "hard"}));
  generate->add_option("--count", gen_count, "instances to generate");
  generate->add_option("--seed", gen_seed, "master seed");
  generate->add_option("--out", gen_out, "output directory");

  // --- solve ---
  auto* solve = app.add_subcommand("solve", "course solver-role evaluation");
  CommonFlags solve_flags;
  std::string solve_difficulty;
  double solve_delta = -1.0;
  add_common(solve, solve_flags);
  solve->add_option("--mode", solve_flags.mode, "direct | cot")
      ->check(CLI::IsMember({"direct", "cot"}));
  solve->add_option("--dataset", solve_flags.dataset, "dataset directory from `generate`");
  solve->add_option("--difficulty", solve_difficulty, "easy | medium | hard")
      ->check(CLI::IsMember({"easy", "medium", "hard"}));
  solve->add_option("--delta", solve_delta, "occupancy threshold");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "verifier-role evaluation");
  CommonFlags verify_flags;
  std::string verify_env = "fitness";
  std::string verify_difficulty;
  double verify_delta = -1.0;
  add_common(verify, verify_flags);
  verify->add_option("--env", verify_env, "fitness | course")
      ->check(CLI::IsMember({"fitness", "course"}));
  verify->add_option("--mode", verify_flags.mode, "zeroshot | fewshot")
      ->check(CLI::IsMember({"zeroshot", "fewshot", "zero-shot", "few-shot"}));
  verify->add_option("--dataset", verify_flags.dataset, "course dataset directory");
  verify->add_option("--difficulty", verify_difficulty, "easy | medium | hard")
      ->check(CLI::IsMember({"easy", "medium", "hard"}));
  verify->add_option("--delta", verify_delta, "occupancy threshold");

  // --- rank ---
  auto* rank = app.add_subcommand("rank", "comparative-heuristic evaluation");
  CommonFlags rank_flags;
  std::string rank_env = "fitness";
  std::string rank_difficulty;
  int rank_candidates = 0;
  add_common(rank, rank_flags);
  rank->add_option("--env", rank_env, "fitness | course")
      ->check(CLI::IsMember({"fitness", "course"}));
  rank->add_option("--mode", rank_flags.mode, "zeroshot | fewshot | oneshot")
      ->check(CLI::IsMember(
          {"zeroshot", "fewshot", "oneshot", "zero-shot", "few-shot", "one-shot"}));
  rank->add_option("--candidates", rank_candidates, "2 or 4")
      ->check(CLI::IsMember({2, 4}));
  rank->add_option("--dataset", rank_flags.dataset, "course dataset directory");
  rank->add_option("--difficulty", rank_difficulty, "easy | medium | hard")
      ->check(CLI::IsMember({"easy", "medium", "hard"}));

  // --- fitness-run ---
  auto* fitness_run = app.add_subcommand("fitness-run", "interactive fitness episodes");
  CommonFlags fit_flags;
  int fit_iterations = 0;
  double fit_alpha = -1.0, fit_beta = -1.0, fit_probability = -1.0;
  bool fit_static = false;
  add_common(fitness_run, fit_flags);
  fitness_run->add_option("--mode", fit_flags.mode, "direct | cot")
      ->check(CLI::IsMember({"direct", "cot"}));
  fitness_run->add_option("--iterations", fit_iterations, "episode length");
  fitness_run->add_option("--alpha", fit_alpha, "selection-score weight");
  fitness_run->add_option("--beta", fit_beta, "reps-score weight");
  fitness_run->add_option("--emergency-probability", fit_probability,
                          "per-iteration emergency probability");
  fitness_run->add_flag("--no-dynamic-constraints", fit_static,
                        "disable emergency injection");

  // --- report ---
  auto* report = app.add_subcommand("report", "aggregate JSONL records");
  std::vector<std::string> report_paths;
  std::string report_format = "text";
  std::string report_out;
  report->add_option("paths", report_paths, "JSONL record files")->required();
  report->add_option("--format", report_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  report->add_option("--out", report_out, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      const auto summary = planbench::harness::cmd_generate(
          planbench::course::difficulty_from_string(gen_difficulty), gen_count, gen_seed,
          gen_out);
      std::cout << "generated " << summary.count << " instance(s); manifest at "
                << summary.manifest_path << "\n";
      return 0;
    }

    if (*solve) {
      ExperimentConfig config = load_base_config(solve_flags.config_path);
      config.environment = planbench::harness::Environment::Course;
      config.role = planbench::harness::RoleKind::Solver;
      if (solve->count("--mode"))
        config.mode = planbench::agents::mode_from_string(solve_flags.mode);
      else if (config.mode != planbench::agents::Mode::CoT)
        config.mode = planbench::agents::Mode::Direct;
      if (solve->count("--dataset")) config.dataset_dir = solve_flags.dataset;
      if (solve->count("--difficulty"))
        config.difficulty = planbench::course::difficulty_from_string(solve_difficulty);
      if (solve->count("--delta")) config.delta = solve_delta;
      apply_common(solve, solve_flags, config);
      return run_and_print(config);
    }

    if (*verify) {
      ExperimentConfig config = load_base_config(verify_flags.config_path);
      config.environment = planbench::harness::environment_from_string(verify_env);
      config.role = planbench::harness::RoleKind::Verifier;
      config.mode = planbench::agents::Mode::ZeroShot;
      if (verify->count("--mode"))
        config.mode = planbench::agents::mode_from_string(verify_flags.mode);
      if (verify->count("--dataset")) config.dataset_dir = verify_flags.dataset;
      if (verify->count("--difficulty"))
        config.difficulty = planbench::course::difficulty_from_string(verify_difficulty);
      if (verify->count("--delta")) config.delta = verify_delta;
      apply_common(verify, verify_flags, config);
      return run_and_print(config);
    }

    if (*rank) {
      ExperimentConfig config = load_base_config(rank_flags.config_path);
      config.environment = planbench::harness::environment_from_string(rank_env);
      config.role = planbench::harness::RoleKind::Heuristic;
      config.mode = planbench::agents::Mode::ZeroShot;
      if (rank->count("--mode"))
        config.mode = planbench::agents::mode_from_string(rank_flags.mode);
      if (rank->count("--candidates")) config.n_candidates = rank_candidates;
      if (rank->count("--dataset")) config.dataset_dir = rank_flags.dataset;
      if (rank->count("--difficulty"))
        config.difficulty = planbench::course::difficulty_from_string(rank_difficulty);
      apply_common(rank, rank_flags, config);
      return run_and_print(config);
    }

    if (*fitness_run) {
      ExperimentConfig config = load_base_config(fit_flags.config_path);
      config.environment = planbench::harness::Environment::Fitness;
      config.role = planbench::harness::RoleKind::Solver;
      if (fitness_run->count("--mode"))
        config.mode = planbench::agents::mode_from_string(fit_flags.mode);
      if (fitness_run->count("--iterations")) config.episode.iterations = fit_iterations;
      if (fitness_run->count("--alpha")) config.episode.alpha = fit_alpha;
      if (fitness_run->count("--beta")) config.episode.beta = fit_beta;
      if (fitness_run->count("--emergency-probability"))
        config.episode.emergency_probability = fit_probability;
      if (fit_static) config.dynamic_constraints = false;
      apply_common(fitness_run, fit_flags, config);
      return run_and_print(config);
    }

    if (*report) {
      std::vector<planbench::harness::EvalRecord> records;
      for (const auto& path : report_paths) {
        for (auto& r : planbench::harness::read_records(path))
          records.push_back(std::move(r));
      }
      const std::string rendered =
          report_format == "json"
              ? planbench::harness::report_json(records).dump(2) + "\n"
              : planbench::harness::report_text(records);
      if (report_out.empty()) {
        std::cout << rendered;
      } else {
        std::ofstream out(report_out);
        if (!out) throw std::runtime_error("cannot write " + report_out);
        out << rendered;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
