#pragma once

#include <string>

#include "planbench/harness/config.hpp"
#include "planbench/harness/records.hpp"

namespace planbench::harness {

struct GenerateSummary {
  int count = 0;
  std::string manifest_path;
  nlohmann::json manifest;
};

// Writes `count` dataset files plus manifest.json with the per-level
// statistics of the generated pool.
GenerateSummary cmd_generate(course::Difficulty difficulty, int count,
                             std::uint64_t seed, const std::string& out_dir);

struct RunSummary {
  int written = 0;
  int skipped = 0;  // already present in the output from an earlier run
  std::string output_path;
};

// Executes the configured role pipeline over n_instances tasks, streaming
// one EvalRecord per instance into output_path. Instances already recorded
// there are skipped, so interrupted runs resume cleanly. Per-instance agent
// failures are recorded, never fatal; configuration errors throw before any
// work starts.
RunSummary run_experiment(const ExperimentConfig& config);

}  // namespace planbench::harness
