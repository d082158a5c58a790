#include "planbench/harness/records.hpp"

namespace planbench::harness {

using nlohmann::json;

json to_json(const EvalRecord& record) {
  json j;
  j["version"] = record.version;
  j["config_hash"] = record.config_hash;
  j["instance_id"] = record.instance_id;
  j["seed"] = record.seed;
  j["environment"] = record.environment;
  j["role"] = record.role;
  j["mode"] = record.mode;
  j["agent"] = record.agent;
  j["condition"] = record.condition;
  j["outcome"] = record.outcome;
  j["transcript"] = record.transcript;
  j["wall_time_ms"] = record.wall_time_ms;
  j["timestamp"] = record.timestamp;
  return j;
}

EvalRecord record_from_json(const json& j) {
  const int version = j.at("version").get<int>();
  if (version != kRecordVersion)
    throw UnknownVersion("record version " + std::to_string(version) +
                         " is not supported (expected " +
                         std::to_string(kRecordVersion) + ")");
  EvalRecord r;
  r.version = version;
  r.config_hash = j.at("config_hash").get<std::string>();
  r.instance_id = j.at("instance_id").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.environment = j.at("environment").get<std::string>();
  r.role = j.at("role").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.agent = j.at("agent").get<std::string>();
  r.condition = j.at("condition").get<std::string>();
  r.outcome = j.at("outcome");
  r.transcript = j.at("transcript");
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

JsonlWriter::JsonlWriter(const std::string& path, bool append)
    : out_(path, append ? std::ios::app : std::ios::trunc) {
  if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
}

void JsonlWriter::write(const EvalRecord& record) {
  out_ << to_json(record).dump() << '\n';
  out_.flush();
}

std::vector<EvalRecord> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<EvalRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": bad JSONL row: " + e.what());
    }
    records.push_back(record_from_json(j));
  }
  return records;
}

std::set<std::string> recorded_instance_ids(const std::string& path) {
  std::ifstream in(path);
  std::set<std::string> ids;
  if (!in) return ids;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      if (j.contains("instance_id") && j["instance_id"].is_string())
        ids.insert(j["instance_id"].get<std::string>());
    } catch (const json::parse_error&) {
      // Truncated tail row from an interrupted run; the rerun regenerates it.
    }
  }
  return ids;
}

}  // namespace planbench::harness
