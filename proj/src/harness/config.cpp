#include "planbench/harness/config.hpp"

#include <cstdio>

namespace planbench::harness {

using nlohmann::json;

const char* to_string(Environment e) {
  return e == Environment::Fitness ? "fitness" : "course";
}

const char* to_string(RoleKind r) {
  switch (r) {
    case RoleKind::Solver: return "solver";
    case RoleKind::Verifier: return "verifier";
    case RoleKind::Heuristic: return "heuristic";
  }
  return "solver";
}

Environment environment_from_string(const std::string& s) {
  if (s == "fitness") return Environment::Fitness;
  if (s == "course") return Environment::Course;
  throw std::invalid_argument("unknown environment: " + s);
}

RoleKind role_from_string(const std::string& s) {
  if (s == "solver") return RoleKind::Solver;
  if (s == "verifier") return RoleKind::Verifier;
  if (s == "heuristic") return RoleKind::Heuristic;
  throw std::invalid_argument("unknown role: " + s);
}

json ExperimentConfig::to_json() const {
  json j;
  j["environment"] = to_string(environment);
  j["role"] = to_string(role);
  j["mode"] = agents::to_string(mode);
  j["difficulty"] = course::to_string(difficulty);
  j["episode"] = {{"alpha", episode.alpha},
                  {"beta", episode.beta},
                  {"emergency_probability", episode.emergency_probability},
                  {"overlap_window", episode.overlap_window},
                  {"iterations", episode.iterations},
                  {"overlap_positive", episode.overlap_positive},
                  {"cost_utility_threshold", episode.cost_utility_threshold}};
  j["dynamic_constraints"] = dynamic_constraints;
  j["n_instances"] = n_instances;
  j["n_candidates"] = n_candidates;
  j["delta"] = delta;
  j["agent"] = agent;
  j["endpoint"] = {{"base_url", endpoint.base_url},
                   {"model_name", endpoint.model_name},
                   {"api_key_env", endpoint.api_key_env},
                   {"temperature", endpoint.temperature},
                   {"max_tokens", endpoint.max_tokens},
                   {"timeout_seconds", endpoint.timeout_seconds},
                   {"max_retries", endpoint.max_retries}};
  if (endpoint.requests_per_minute)
    j["endpoint"]["requests_per_minute"] = *endpoint.requests_per_minute;
  j["seed"] = seed;
  j["output_path"] = output_path;
  j["dataset_dir"] = dataset_dir;
  j["parallelism"] = parallelism;
  j["deterministic_output"] = deterministic_output;
  j["allow_reask"] = allow_reask;
  j["data_dir"] = data_dir;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  if (j.contains("environment"))
    c.environment = environment_from_string(j["environment"].get<std::string>());
  if (j.contains("role")) c.role = role_from_string(j["role"].get<std::string>());
  if (j.contains("mode")) c.mode = agents::mode_from_string(j["mode"].get<std::string>());
  if (j.contains("difficulty"))
    c.difficulty = course::difficulty_from_string(j["difficulty"].get<std::string>());
  if (j.contains("episode")) {
    const json& e = j["episode"];
    c.episode.alpha = e.value("alpha", c.episode.alpha);
    c.episode.beta = e.value("beta", c.episode.beta);
    c.episode.emergency_probability =
        e.value("emergency_probability", c.episode.emergency_probability);
    c.episode.overlap_window = e.value("overlap_window", c.episode.overlap_window);
    c.episode.iterations = e.value("iterations", c.episode.iterations);
    c.episode.overlap_positive = e.value("overlap_positive", c.episode.overlap_positive);
    c.episode.cost_utility_threshold =
        e.value("cost_utility_threshold", c.episode.cost_utility_threshold);
  }
  c.dynamic_constraints = j.value("dynamic_constraints", c.dynamic_constraints);
  c.n_instances = j.value("n_instances", c.n_instances);
  c.n_candidates = j.value("n_candidates", c.n_candidates);
  c.delta = j.value("delta", c.delta);
  c.agent = j.value("agent", c.agent);
  if (j.contains("endpoint")) {
    const json& e = j["endpoint"];
    c.endpoint.base_url = e.value("base_url", c.endpoint.base_url);
    c.endpoint.model_name = e.value("model_name", c.endpoint.model_name);
    c.endpoint.api_key_env = e.value("api_key_env", c.endpoint.api_key_env);
    c.endpoint.temperature = e.value("temperature", c.endpoint.temperature);
    c.endpoint.max_tokens = e.value("max_tokens", c.endpoint.max_tokens);
    c.endpoint.timeout_seconds = e.value("timeout_seconds", c.endpoint.timeout_seconds);
    c.endpoint.max_retries = e.value("max_retries", c.endpoint.max_retries);
    if (e.contains("requests_per_minute"))
      c.endpoint.requests_per_minute = e["requests_per_minute"].get<int>();
  }
  c.seed = j.value("seed", c.seed);
  c.output_path = j.value("output_path", c.output_path);
  c.dataset_dir = j.value("dataset_dir", c.dataset_dir);
  c.parallelism = j.value("parallelism", c.parallelism);
  c.deterministic_output = j.value("deterministic_output", c.deterministic_output);
  c.allow_reask = j.value("allow_reask", c.allow_reask);
  c.data_dir = j.value("data_dir", c.data_dir);
  return c;
}

std::string ExperimentConfig::hash() const {
  const std::string text = to_json().dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void ExperimentConfig::validate() const {
  if (n_instances < 1) throw std::invalid_argument("n_instances must be >= 1");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  episode.validate();

  using agents::Mode;
  bool ok = false;
  switch (role) {
    case RoleKind::Solver:
      ok = mode == Mode::Direct || mode == Mode::CoT;
      break;
    case RoleKind::Verifier:
      ok = mode == Mode::ZeroShot ||
           (mode == Mode::FewShot && environment == Environment::Fitness);
      break;
    case RoleKind::Heuristic:
      if (n_candidates != 2 && n_candidates != 4)
        throw std::invalid_argument("n_candidates must be 2 or 4");
      ok = mode == Mode::ZeroShot ||
           (mode == Mode::FewShot && environment == Environment::Fitness) ||
           (mode == Mode::OneShot && environment == Environment::Course);
      break;
  }
  if (!ok)
    throw std::invalid_argument(std::string("mode ") + agents::to_string(mode) +
                                " is not defined for role " + to_string(role) +
                                " in environment " + to_string(environment));

  if (agent != "endpoint" && agent.rfind("scripted:", 0) != 0)
    throw std::invalid_argument("agent must be 'endpoint' or 'scripted:<name>'");
}

}  // namespace planbench::harness
