#include "planbench/harness/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <map>
#include <mutex>
#include <thread>

#include "planbench/agents/chat_agent.hpp"
#include "planbench/agents/scripted.hpp"
#include "planbench/course/distance.hpp"
#include "planbench/course/io.hpp"
#include "planbench/course/tasks.hpp"
#include "planbench/fitness/banks.hpp"
#include "planbench/fitness/tasks.hpp"
#include "planbench/rng.hpp"

namespace planbench::harness {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return Rng::mix(Rng::mix(base) ^ (index + 1));
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json transcript_from_agent(const std::vector<agents::AgentTranscript>& transcripts) {
  json arr = json::array();
  for (const auto& t : transcripts) {
    json entry;
    entry["messages"] = json::array();
    for (const auto& m : t.messages)
      entry["messages"].push_back({{"role", m.role}, {"content", m.content}});
    entry["prompt_hash"] = t.prompt_hash;
    entry["parse_errors"] = t.answer.parse_errors;
    if (t.usage)
      entry["token_usage"] = {{"prompt_tokens", t.usage->prompt_tokens},
                              {"completion_tokens", t.usage->completion_tokens}};
    if (t.transport_failed) entry["endpoint_failure"] = t.failure;
    arr.push_back(std::move(entry));
  }
  return arr;
}

json episode_transcript_json(const fitness::EpisodeState& state) {
  json arr = json::array();
  for (std::size_t i = 0; i < state.plan_history.size(); ++i) {
    json row;
    row["iteration"] = i + 1;
    row["plan"] = state.plan_history[i].reps;
    const fitness::Feedback& fb = state.feedback_history[i];
    row["feasible"] = fb.feasible;
    row["violations"] = fb.violations;
    row["satisfaction"] = fb.satisfaction;
    if (fb.emergency) {
      row["emergency"] = fb.emergency->description;
    } else {
      row["emergency"] = nullptr;
    }
    arr.push_back(std::move(row));
  }
  return arr;
}

// Splits "Course 1 Section 2" around the last " Section " occurrence.
std::optional<course::SectionRef> split_section_key(const std::string& key) {
  const auto at = key.rfind(" Section ");
  if (at == std::string::npos) return std::nullopt;
  return course::SectionRef{key.substr(0, at), key.substr(at + 1)};
}

struct CourseJob {
  std::string id;
  course::CourseInstanceRecord record;
};

// Scripted verdict/ranking dispatch shared by both environments.
struct ScriptedName {
  bool scripted = false;
  std::string name;  // "oracle", "random", ...
};

ScriptedName scripted_name(const std::string& agent) {
  if (agent.rfind("scripted:", 0) == 0) return {true, agent.substr(9)};
  return {false, ""};
}

class Runner {
 public:
  explicit Runner(const ExperimentConfig& config)
      : config_(config),
        bank_(fitness::default_exercise_bank()),
        emergencies_(fitness::default_emergency_bank()) {
    config_.validate();
    if (config_.agent == "endpoint") {
      client_ = std::make_shared<agents::ChatClient>(config_.endpoint);
      const std::string env = to_string(config_.environment);
      const agents::Role role = config_.role == RoleKind::Solver
                                    ? agents::Role::Solver
                                : config_.role == RoleKind::Verifier
                                    ? agents::Role::Verifier
                                    : agents::Role::HeuristicRanker;
      template_ = agents::load_template(config_.data_dir + "/prompts", env, role,
                                        config_.mode);
    }
  }

  RunSummary run() {
    std::vector<std::string> ids = instance_ids();

    // Seed-shuffled visit order, recorded implicitly by the output sequence.
    std::vector<std::size_t> order(ids.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng shuffle_rng(Rng::mix(config_.seed) ^ 0x6f72646572ULL);
    shuffle_rng.shuffle(order);

    // Resume: keep valid rows, drop a truncated tail, skip finished ids.
    std::set<std::string> done = recorded_instance_ids(config_.output_path);
    if (!done.empty()) repair_output();

    std::vector<std::size_t> todo;
    for (std::size_t pos : order) {
      if (done.count(ids[pos]) == 0) todo.push_back(pos);
    }

    RunSummary summary;
    summary.skipped = static_cast<int>(ids.size() - todo.size());
    summary.output_path = config_.output_path;

    JsonlWriter writer(config_.output_path, /*append=*/true);

    std::mutex mutex;
    std::condition_variable cv;
    std::map<std::size_t, EvalRecord> ready;  // todo position -> record
    std::atomic<std::size_t> next_job{0};

    const int workers =
        std::max(1, std::min<int>(config_.parallelism, static_cast<int>(todo.size())));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t j = next_job.fetch_add(1);
          if (j >= todo.size()) break;
          EvalRecord record = run_instance(ids[todo[j]], todo[j]);
          {
            std::lock_guard<std::mutex> lock(mutex);
            ready.emplace(j, std::move(record));
          }
          cv.notify_one();
        }
      });
    }

    for (std::size_t expect = 0; expect < todo.size(); ++expect) {
      std::unique_lock<std::mutex> lock(mutex);
      cv.wait(lock, [&] { return ready.count(expect) > 0; });
      EvalRecord record = std::move(ready.at(expect));
      ready.erase(expect);
      lock.unlock();
      writer.write(record);
      ++summary.written;
    }
    for (auto& t : pool) t.join();
    return summary;
  }

 private:
  std::vector<std::string> instance_ids() {
    std::vector<std::string> ids;
    if (config_.environment == Environment::Course && !config_.dataset_dir.empty()) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(config_.dataset_dir)) {
        if (entry.path().extension() == ".json" &&
            entry.path().filename().string() != "manifest.json")
          files.push_back(entry.path().filename().string());
      }
      std::sort(files.begin(), files.end());
      if (static_cast<int>(files.size()) < config_.n_instances)
        throw std::invalid_argument(
            "dataset_dir holds " + std::to_string(files.size()) + " files but " +
            std::to_string(config_.n_instances) + " instances were requested");
      ids.assign(files.begin(), files.begin() + config_.n_instances);
    } else {
      const std::string prefix = config_.environment == Environment::Course
                                     ? std::string("course-") + course::to_string(config_.difficulty)
                                     : "fitness";
      for (int i = 0; i < config_.n_instances; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%05d", i);
        ids.push_back(prefix + "-" + buf);
      }
    }
    return ids;
  }

  void repair_output() {
    std::ifstream in(config_.output_path);
    if (!in) return;
    std::vector<std::string> good;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (json::accept(line)) good.push_back(line);  // drop a truncated tail row
    }
    in.close();
    std::ofstream out(config_.output_path, std::ios::trunc);
    for (const auto& row : good) out << row << '\n';
  }

  EvalRecord run_instance(const std::string& id, std::size_t index) {
    const auto start = std::chrono::steady_clock::now();
    EvalRecord record;
    record.config_hash = config_.hash();
    record.instance_id = id;
    record.seed = derive_seed(config_.seed, index);
    record.environment = to_string(config_.environment);
    record.role = to_string(config_.role);
    record.mode = agents::to_string(config_.mode);
    record.agent = config_.agent == "endpoint"
                       ? "endpoint:" + config_.endpoint.model_name
                       : config_.agent;
    record.condition = condition_tag();
    record.transcript = json::array();

    try {
      if (config_.environment == Environment::Fitness) {
        switch (config_.role) {
          case RoleKind::Solver: run_fitness_episode(record); break;
          case RoleKind::Verifier: run_fitness_verifier(record); break;
          case RoleKind::Heuristic: run_fitness_heuristic(record); break;
        }
      } else {
        const CourseJob job = course_job(id, index);
        switch (config_.role) {
          case RoleKind::Solver: run_course_solver(job, record); break;
          case RoleKind::Verifier: run_course_verifier(job, record); break;
          case RoleKind::Heuristic: run_course_heuristic(job, record); break;
        }
      }
    } catch (const std::exception& e) {
      record.outcome = json{{"error", e.what()}};
    }

    if (config_.deterministic_output) {
      record.wall_time_ms = 0.0;
      record.timestamp = "";
    } else {
      record.wall_time_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                    start)
              .count();
      record.timestamp = iso_timestamp();
    }
    return record;
  }

  std::string condition_tag() const {
    if (config_.environment == Environment::Course)
      return course::to_string(config_.difficulty);
    return std::to_string(config_.episode.iterations) + "iter/" +
           (config_.dynamic_constraints ? "dynamic" : "static");
  }

  fitness::EpisodeConfig episode_config(std::uint64_t seed) const {
    fitness::EpisodeConfig ec = config_.episode;
    ec.seed = seed;
    if (!config_.dynamic_constraints) ec.emergency_probability = 0.0;
    return ec;
  }

  // --- fitness pipelines --------------------------------------------------

  void run_fitness_episode(EvalRecord& record) {
    Rng rng(record.seed);
    const fitness::UserProfile profile = fitness::sample_profile(bank_, rng);
    const fitness::EpisodeConfig ec = episode_config(rng.next_u64());

    std::unique_ptr<fitness::SolverAgent> agent;
    agents::ChatFitnessSolver* chat_solver = nullptr;
    const ScriptedName s = scripted_name(config_.agent);
    if (s.scripted) {
      if (s.name == "oracle") {
        agent = agents::make_oracle_fitness_solver(profile, bank_);
      } else if (s.name == "random") {
        agent = agents::make_random_fitness_solver(rng.next_u64());
      } else if (s.name == "hillclimb") {
        agent = agents::make_hill_climb_fitness_solver(rng.next_u64());
      } else if (s.name == "zero") {
        agent = agents::make_zero_fitness_solver();
      } else {
        throw std::invalid_argument("unknown scripted fitness agent: " + s.name);
      }
    } else {
      auto chat = std::make_unique<agents::ChatFitnessSolver>(client_, template_,
                                                              config_.allow_reask);
      chat_solver = chat.get();
      agent = std::move(chat);
    }

    const fitness::EpisodeResult result =
        fitness::run_episode(*agent, profile, bank_, ec, emergencies_);
    record.outcome = {{"feasibility", result.metrics.feasibility},
                      {"optimality", result.metrics.optimality},
                      {"cost_utility", result.metrics.cost_utility},
                      {"diversity", result.metrics.diversity},
                      {"agent_failures", result.metrics.agent_failures},
                      {"iterations", ec.iterations},
                      {"dynamic_constraints", config_.dynamic_constraints}};
    record.transcript = episode_transcript_json(result.state);
    if (chat_solver != nullptr)
      record.transcript = json{{"episode", record.transcript},
                               {"exchanges", transcript_from_agent(chat_solver->transcripts())}};
  }

  template <typename BuildFn>
  auto build_with_retry(BuildFn&& build, std::uint64_t seed) {
    std::uint64_t s = seed;
    for (int attempt = 0;; ++attempt) {
      try {
        return build(s);
      } catch (const fitness::DegenerateTask&) {
        if (attempt >= 8) throw;
      } catch (const course::DegenerateTask&) {
        if (attempt >= 8) throw;
      }
      s = Rng::mix(s);
    }
  }

  void run_fitness_verifier(EvalRecord& record) {
    const fitness::TaskMode mode = config_.mode == agents::Mode::FewShot
                                       ? fitness::TaskMode::FewShot
                                       : fitness::TaskMode::ZeroShot;
    const auto task = build_with_retry(
        [&](std::uint64_t s) {
          return fitness::build_verifier_task(mode, s, bank_, emergencies_);
        },
        record.seed);

    std::optional<bool> prediction;
    bool malformed = false;
    const ScriptedName s = scripted_name(config_.agent);
    if (s.scripted) {
      if (s.name == "oracle") {
        prediction = task.ground_truth;
      } else if (s.name == "random") {
        Rng rng(Rng::mix(record.seed) ^ 0x76657264ULL);
        prediction = rng.bernoulli(0.5);
      } else {
        throw std::invalid_argument("unknown scripted verifier agent: " + s.name);
      }
    } else {
      std::map<std::string, std::string> bindings = {
          {"problem", task.rendered.problem_text},
          {"candidate", task.rendered.candidate_text},
          {"context", task.rendered.context_text.value_or("")}};
      const auto transcript = agents::ask(*client_, template_, bindings,
                                          agents::AnswerKind::Verdict, config_.allow_reask);
      record.transcript = transcript_from_agent({transcript});
      prediction = transcript.answer.verdict_feasible;
      malformed = !transcript.answer.ok() || !prediction.has_value();
    }

    const bool pred = prediction.value_or(false);
    record.outcome = {{"prediction", pred},
                      {"truth", task.ground_truth},
                      {"correct", !malformed && pred == task.ground_truth},
                      {"malformed", malformed}};
  }

  void run_fitness_heuristic(EvalRecord& record) {
    const fitness::TaskMode mode = config_.mode == agents::Mode::FewShot
                                       ? fitness::TaskMode::FewShot
                                       : fitness::TaskMode::ZeroShot;
    const auto task = build_with_retry(
        [&](std::uint64_t s) {
          return fitness::build_heuristic_task(mode, config_.n_candidates, s, bank_,
                                               emergencies_);
        },
        record.seed);
    grade_ranking_outcome(task.rendered, task.oracle_order, record);
  }

  // --- course pipelines ----------------------------------------------------

  CourseJob course_job(const std::string& id, std::size_t index) {
    CourseJob job;
    job.id = id;
    if (!config_.dataset_dir.empty()) {
      job.record = course::load_instance_file(config_.dataset_dir + "/" + id);
      // Dataset files do not re-run the solver; trust but verify the stored
      // optimum when grading needs it.
      if (job.record.gold.assignments.empty()) {
        const auto solution = course::solve_exact(job.record.instance);
        if (!solution) throw std::runtime_error(id + ": instance is unsolvable");
        job.record.gold = solution->plan;
        job.record.optimal_slack = solution->optimal_slack;
      }
    } else {
      job.record = course::generate_instance(config_.difficulty,
                                             derive_seed(config_.seed, index));
    }
    return job;
  }

  void run_course_solver(const CourseJob& job, EvalRecord& record) {
    course::AssignmentPlan plan;
    bool delivered = true;
    const ScriptedName s = scripted_name(config_.agent);
    if (s.scripted) {
      if (s.name == "oracle") {
        plan = job.record.gold;
      } else if (s.name == "random") {
        Rng rng(Rng::mix(record.seed) ^ 0x736f6c76ULL);
        plan = agents::random_course_assignment(job.record.instance, rng);
      } else {
        throw std::invalid_argument("unknown scripted course agent: " + s.name);
      }
    } else {
      std::map<std::string, std::string> bindings = {
          {"problem", job.record.instance.text_description}};
      const auto transcript =
          agents::ask(*client_, template_, bindings,
                      agents::AnswerKind::CourseAssignment, config_.allow_reask);
      record.transcript = transcript_from_agent({transcript});
      if (transcript.answer.ok() && transcript.answer.course_assignment) {
        for (const auto& [key, room] : *transcript.answer.course_assignment) {
          const auto ref = split_section_key(key);
          if (!ref) {
            delivered = false;
            break;
          }
          plan.assignments[*ref] = room;
        }
      } else {
        delivered = false;
      }
    }

    json outcome;
    outcome["delivered"] = delivered;
    if (delivered) {
      try {
        const course::PlanAssessment a =
            course::assess(plan, job.record.instance, config_.delta);
        outcome["complete"] = a.complete;
        outcome["feasible"] = a.feasible;
        outcome["optimal"] = a.threshold_pass;
        outcome["total_slack"] = a.total_slack;
        outcome["occupancy_ratio"] = a.occupancy_ratio;
        outcome["distance"] =
            course::plan_distance(plan, job.record.gold, job.record.instance);
        outcome["optimal_slack"] = job.record.optimal_slack;
      } catch (const course::UnknownReference& e) {
        outcome["delivered"] = false;
        outcome["error"] = e.what();
      }
    }
    if (!outcome["delivered"].get<bool>()) {
      outcome["complete"] = false;
      outcome["feasible"] = false;
      outcome["optimal"] = false;
    }
    record.outcome = std::move(outcome);
  }

  void run_course_verifier(const CourseJob& job, EvalRecord& record) {
    const auto task = build_with_retry(
        [&](std::uint64_t s) {
          return course::build_course_verifier_task(job.record, s, config_.delta);
        },
        record.seed);

    std::optional<bool> pred_feasible;
    std::optional<bool> pred_optimal;
    bool malformed = false;
    const ScriptedName s = scripted_name(config_.agent);
    if (s.scripted) {
      if (s.name == "oracle") {
        pred_feasible = task.ground_truth.feasible;
        pred_optimal = task.ground_truth.optimal;
      } else if (s.name == "random") {
        Rng rng(Rng::mix(record.seed) ^ 0x76657263ULL);
        pred_feasible = rng.bernoulli(0.5);
        pred_optimal = rng.bernoulli(0.5);
      } else {
        throw std::invalid_argument("unknown scripted verifier agent: " + s.name);
      }
    } else {
      std::map<std::string, std::string> bindings = {
          {"problem", task.rendered.problem_text},
          {"candidate", task.rendered.candidate_text},
          {"context", task.rendered.context_text.value_or("")}};
      const auto transcript = agents::ask(*client_, template_, bindings,
                                          agents::AnswerKind::Verdict, config_.allow_reask);
      record.transcript = transcript_from_agent({transcript});
      pred_feasible = transcript.answer.verdict_feasible;
      pred_optimal = transcript.answer.verdict_optimal;
      malformed = !transcript.answer.ok() || !pred_feasible.has_value();
    }

    const bool pf = pred_feasible.value_or(false);
    const bool po = pred_optimal.value_or(false);
    const bool correct_feasible = !malformed && pf == task.ground_truth.feasible;
    const bool correct_optimal =
        !malformed && pred_optimal.has_value() && po == task.ground_truth.optimal;
    record.outcome = {{"pred_feasible", pf},
                      {"pred_optimal", po},
                      {"truth_feasible", task.ground_truth.feasible},
                      {"truth_optimal", task.ground_truth.optimal},
                      {"correct_feasible", correct_feasible},
                      {"correct_optimal", correct_optimal},
                      {"correct_both", correct_feasible && correct_optimal},
                      {"malformed", malformed}};
  }

  void run_course_heuristic(const CourseJob& job, EvalRecord& record) {
    const course::RankMode mode = config_.mode == agents::Mode::OneShot
                                      ? course::RankMode::OneShot
                                      : course::RankMode::ZeroShot;
    const auto task = build_with_retry(
        [&](std::uint64_t s) {
          return course::build_course_heuristic_task(job.record, config_.n_candidates,
                                                     mode, s);
        },
        record.seed);
    grade_ranking_outcome(task.rendered, task.oracle_order, record);
  }

  // --- shared ranking grading ----------------------------------------------

  void grade_ranking_outcome(const eval::RankingTask& task,
                             const std::vector<std::size_t>& oracle_order,
                             EvalRecord& record) {
    std::vector<std::size_t> agent_order;
    bool malformed = false;
    const ScriptedName s = scripted_name(config_.agent);
    if (s.scripted) {
      if (s.name == "oracle") {
        agent_order = agents::oracle_ranking(task);
      } else if (s.name == "random") {
        Rng rng(Rng::mix(record.seed) ^ 0x72616e6bULL);
        agent_order = agents::random_ranking(task.candidate_texts.size(), rng);
      } else {
        throw std::invalid_argument("unknown scripted ranking agent: " + s.name);
      }
    } else {
      std::map<std::string, std::string> bindings = {
          {"problem", task.problem_text},
          {"candidates", agents::label_candidates(task.candidate_texts)},
          {"context", task.context_text.value_or("")}};
      const auto transcript = agents::ask(*client_, template_, bindings,
                                          agents::AnswerKind::Ranking, config_.allow_reask);
      record.transcript = transcript_from_agent({transcript});
      if (transcript.answer.ok() && transcript.answer.ranking_labels) {
        const auto order = agents::labels_to_order(*transcript.answer.ranking_labels,
                                                   task.candidate_texts.size());
        if (order) {
          agent_order = *order;
          malformed = order->size() != task.candidate_texts.size();
        } else {
          malformed = true;
        }
      } else {
        malformed = true;
      }
    }

    const eval::RankingResult result =
        eval::grade_ranking(agent_order, oracle_order, malformed);
    json hits;
    for (const auto& [k, hit] : result.hit_at) hits[std::to_string(k)] = hit;
    record.outcome = {{"n_candidates", static_cast<int>(task.candidate_texts.size())},
                      {"hit_at", hits},
                      {"pairwise_agreement", result.pairwise},
                      {"malformed", result.malformed},
                      {"agent_order", result.agent_order},
                      {"oracle_order", result.oracle_order}};
  }

  ExperimentConfig config_;
  fitness::ExerciseBank bank_;
  fitness::EmergencyBank emergencies_;
  std::shared_ptr<agents::ChatClient> client_;
  agents::PromptTemplate template_;
};

}  // namespace

GenerateSummary cmd_generate(course::Difficulty difficulty, int count,
                             std::uint64_t seed, const std::string& out_dir) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  fs::create_directories(out_dir);

  double sections_per_course = 0.0;
  double students_per_section = 0.0;
  double classrooms = 0.0;
  double seats_per_classroom = 0.0;
  double sections_per_classroom = 0.0;
  long long total_sections = 0;
  long long total_rooms = 0;

  for (int i = 0; i < count; ++i) {
    const auto record = course::generate_instance(difficulty, derive_seed(seed, i));
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%05d", i);
    course::save_instance_file(record, out_dir + "/instance_" + std::string(buf) + ".json");

    const auto& inst = record.instance;
    std::set<std::string> courses;
    long long enrollment = 0;
    for (const auto& s : inst.sections) {
      courses.insert(s.course_id);
      enrollment += s.enrollment;
    }
    long long seats = 0;
    for (const auto& r : inst.classrooms) seats += r.capacity;

    sections_per_course +=
        static_cast<double>(inst.sections.size()) / static_cast<double>(courses.size());
    students_per_section +=
        static_cast<double>(enrollment) / static_cast<double>(inst.sections.size());
    classrooms += static_cast<double>(inst.classrooms.size());
    seats_per_classroom +=
        static_cast<double>(seats) / static_cast<double>(inst.classrooms.size());
    sections_per_classroom += static_cast<double>(inst.sections.size()) /
                              static_cast<double>(inst.classrooms.size());
    total_sections += static_cast<long long>(inst.sections.size());
    total_rooms += static_cast<long long>(inst.classrooms.size());
  }

  const auto params = course::params_for(difficulty);
  GenerateSummary summary;
  summary.count = count;
  summary.manifest = {
      {"difficulty", course::to_string(difficulty)},
      {"count", count},
      {"seed", seed},
      {"courses", params.courses},
      {"avg_sections_per_course", sections_per_course / count},
      {"avg_students_per_section", students_per_section / count},
      {"avg_classrooms", classrooms / count},
      {"avg_seats_per_classroom", seats_per_classroom / count},
      {"sections_per_classroom", sections_per_classroom / count},
      {"total_sections", total_sections},
      {"total_classrooms", total_rooms}};
  summary.manifest_path = out_dir + "/manifest.json";
  std::ofstream out(summary.manifest_path);
  if (!out) throw std::runtime_error("cannot write " + summary.manifest_path);
  out << summary.manifest.dump(4) << '\n';
  return summary;
}

RunSummary run_experiment(const ExperimentConfig& config) {
  Runner runner(config);
  return runner.run();
}

}  // namespace planbench::harness
