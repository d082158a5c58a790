#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>

#include "planbench/agents/client.hpp"
#include "planbench/agents/prompts.hpp"
#include "planbench/course/types.hpp"
#include "planbench/fitness/types.hpp"

namespace planbench::harness {

enum class Environment { Fitness, Course };
enum class RoleKind { Solver, Verifier, Heuristic };

const char* to_string(Environment e);
const char* to_string(RoleKind r);
Environment environment_from_string(const std::string& s);
RoleKind role_from_string(const std::string& s);

// One experiment = one (environment, role, agent, mode) sweep over
// n_instances task instances. Serializes 1:1 to the JSON config file; CLI
// flags override file values field by field.
struct ExperimentConfig {
  Environment environment = Environment::Fitness;
  RoleKind role = RoleKind::Solver;
  agents::Mode mode = agents::Mode::Direct;

  course::Difficulty difficulty = course::Difficulty::Easy;
  fitness::EpisodeConfig episode;
  bool dynamic_constraints = true;  // fitness: emergency injection on/off

  int n_instances = 10;
  int n_candidates = 4;
  double delta = 1.3;

  std::string agent = "scripted:oracle";  // or "endpoint"
  agents::ChatEndpointConfig endpoint;

  std::uint64_t seed = 0;
  std::string output_path = "records.jsonl";
  std::string dataset_dir;  // course: read instances from here when set
  int parallelism = 1;
  bool deterministic_output = false;  // zero wall time and timestamp fields
  bool allow_reask = false;
  std::string data_dir = "data";  // prompt templates and banks

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);

  // FNV-1a over the canonical serialization; identifies the run setup in
  // every record.
  std::string hash() const;

  // Rejects inconsistent combinations (mode not defined for the role, bad
  // counts) before any work happens.
  void validate() const;
};

}  // namespace planbench::harness
