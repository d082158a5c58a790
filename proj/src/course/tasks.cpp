#include "planbench/course/tasks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "planbench/course/distance.hpp"
#include "planbench/course/slots.hpp"

namespace planbench::course {

namespace {

constexpr int kBuildRetries = 25;

// The written comparative heuristic shown in one-shot mode; a small worked
// example follows the same shape as the real question.
std::string one_shot_exemplar() {
  std::ostringstream out;
  out << "Worked example.\n"
      << "Problem: two classrooms, classroom 1 with 30 seats and classroom 2 with "
         "28 seats. Course 1 Section 1 (27 students) meets ['Monday', 'Wednesday'] "
         "at 10:00AM-11:15AM; Course 1 Section 2 (29 students) meets ['Monday', "
         "'Wednesday'] at 10:00AM-11:15AM; Course 2 Section 1 (25 students) meets "
         "['Tuesday', 'Thursday'] at 1:00PM-2:15PM.\n"
      << "Candidate A: {\"Course 1 Section 1\": \"classroom 2\", \"Course 1 "
         "Section 2\": \"classroom 1\", \"Course 2 Section 1\": \"classroom 1\"}\n"
      << "Candidate B: {\"Course 1 Section 2\": \"classroom 1\"}\n"
      << "Heuristic to follow: a plan is closer to a correct solution when fewer "
         "sections still need work. Count the sections that are missing, placed in "
         "a room that is too small, or clashing with another section in the same "
         "room at the same time; fewer such sections ranks higher. Candidate A "
         "assigns all three sections, rooms are large enough, and the two Monday "
         "sections sit in different rooms, so nothing needs to change. Candidate B "
         "leaves two sections unassigned, so two assignments are still missing.\n"
      << "Answer: {\"ranking\": [\"A\", \"B\"]}\n";
  return out.str();
}

}  // namespace

std::string render_plan_text(const AssignmentPlan& plan, const CourseInstance& instance) {
  // Instance section order keeps renderings deterministic and diff-friendly.
  std::string out = "{";
  bool first = true;
  for (const auto& sec : instance.sections) {
    const auto it = plan.assignments.find({sec.course_id, sec.section_id});
    if (it == plan.assignments.end()) continue;
    if (!first) out += ", ";
    out += "\"" + sec.course_id + " " + sec.section_id + "\": \"" + it->second + "\"";
    first = false;
  }
  out += "}";
  return out;
}

CourseRankingTask build_course_heuristic_task(const CourseInstanceRecord& record,
                                              int n_candidates, RankMode mode,
                                              std::uint64_t seed) {
  if (n_candidates < 2)
    throw std::invalid_argument("build_course_heuristic_task: need >= 2 candidates");
  const std::vector<std::pair<double, double>> grades =
      n_candidates == 2
          ? std::vector<std::pair<double, double>>{{1.0, 0.0}, {0.5, 0.2}}
          : std::vector<std::pair<double, double>>{
                {1.0, 0.0}, {0.75, 0.2}, {0.5, 0.2}, {0.25, 0.2}};
  if (n_candidates != static_cast<int>(grades.size()))
    throw std::invalid_argument("build_course_heuristic_task: supported sizes are 2 and 4");

  Rng rng(seed);
  for (int attempt = 0; attempt < kBuildRetries; ++attempt) {
    std::vector<AssignmentPlan> candidates;
    std::set<int> seen;
    std::vector<int> distances;
    bool ok = true;
    for (const auto& [keep, alter] : grades) {
      AssignmentPlan plan =
          corrupt_plan(record.gold, record.instance, keep, alter, rng.next_u64());
      const int d = plan_distance(plan, record.gold, record.instance);
      if (!seen.insert(d).second) {
        ok = false;
        break;
      }
      candidates.push_back(std::move(plan));
      distances.push_back(d);
    }
    if (!ok) continue;

    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);

    CourseRankingTask task;
    for (std::size_t i : order) {
      task.candidates.push_back(candidates[i]);
      task.distances.push_back(distances[i]);
    }
    task.rendered.problem_text = record.instance.text_description;
    for (const auto& plan : task.candidates)
      task.rendered.candidate_texts.push_back(render_plan_text(plan, record.instance));
    if (mode == RankMode::OneShot) task.rendered.context_text = one_shot_exemplar();
    task.rendered.orientation = eval::Orientation::LowerBetter;
    for (int d : task.distances)
      task.rendered.oracle_scores.push_back(static_cast<double>(d));
    task.oracle_order =
        eval::rank_by_scores(task.rendered.oracle_scores, eval::Orientation::LowerBetter);
    return task;
  }
  throw DegenerateTask("build_course_heuristic_task: corruption grades kept colliding");
}

CourseVerifierTask build_course_verifier_task(const CourseInstanceRecord& record,
                                              std::uint64_t seed, double delta) {
  Rng rng(seed);
  CourseVerifierTask task;
  if (rng.bernoulli(0.5)) {
    task.candidate = record.gold;
  } else {
    // Damaged plans keep every section assigned so the verdict hinges on the
    // conflict and capacity constraints, not on completeness alone. Retry
    // until the corruption actually breaks something, keeping labels
    // balanced.
    for (int attempt = 0; attempt < kBuildRetries; ++attempt) {
      const double alter = rng.uniform_real(0.2, 0.6);
      AssignmentPlan plan =
          corrupt_plan(record.gold, record.instance, 1.0, alter, rng.next_u64());
      task.candidate = std::move(plan);
      if (!assess(task.candidate, record.instance, delta).feasible) break;
    }
  }
  const PlanAssessment verdict = assess(task.candidate, record.instance, delta);
  task.ground_truth = {verdict.feasible, verdict.threshold_pass};
  task.rendered.problem_text = record.instance.text_description;
  task.rendered.candidate_text = render_plan_text(task.candidate, record.instance);
  return task;
}

}  // namespace planbench::course
