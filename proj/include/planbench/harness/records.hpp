#pragma once

#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <set>
#include <string>
#include <vector>

namespace planbench::harness {

struct UnknownVersion : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MixedRoles : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kRecordVersion = 1;

// One graded task instance, one JSONL row. Outcomes are pure functions of
// (config, instance_id, seed); re-grading a stored record must reproduce the
// outcome bit for bit.
struct EvalRecord {
  int version = kRecordVersion;
  std::string config_hash;
  std::string instance_id;
  std::uint64_t seed = 0;
  std::string environment;
  std::string role;
  std::string mode;
  std::string agent;
  std::string condition;  // difficulty or iteration/dynamic tag
  nlohmann::json outcome;
  nlohmann::json transcript;
  double wall_time_ms = 0.0;
  std::string timestamp;  // empty in deterministic-output runs
};

nlohmann::json to_json(const EvalRecord& record);
EvalRecord record_from_json(const nlohmann::json& j);  // UnknownVersion on mismatch

// Append-only sink; one flush per record so an interrupted run leaves a
// valid prefix behind.
class JsonlWriter {
 public:
  explicit JsonlWriter(const std::string& path, bool append = true);
  void write(const EvalRecord& record);

 private:
  std::ofstream out_;
};

std::vector<EvalRecord> read_records(const std::string& path);

// Tolerant scan used for resume: collects instance_ids from well-formed rows
// of a possibly truncated file; a missing file yields an empty set.
std::set<std::string> recorded_instance_ids(const std::string& path);

}  // namespace planbench::harness
