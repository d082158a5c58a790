#pragma once

#include <cstdint>

#include "planbench/course/assess.hpp"
#include "planbench/course/generator.hpp"
#include "planbench/eval/tasks.hpp"

namespace planbench::course {

enum class RankMode { ZeroShot, OneShot };

std::string render_plan_text(const AssignmentPlan& plan, const CourseInstance& instance);

struct CourseRankingTask {
  std::vector<AssignmentPlan> candidates;  // presentation order
  std::vector<int> distances;             // oracle distances, same order
  eval::RankingTask rendered;
  std::vector<std::size_t> oracle_order;  // ascending distance
};

// Derives n candidates from the gold plan at graded corruption levels so all
// oracle distances are pairwise distinct; one-shot mode prepends a worked
// two-candidate exemplar spelling out the comparison heuristic.
CourseRankingTask build_course_heuristic_task(const CourseInstanceRecord& record,
                                              int n_candidates, RankMode mode,
                                              std::uint64_t seed);

struct CourseVerifierTruth {
  bool feasible = false;
  bool optimal = false;  // threshold_pass of assess
};

struct CourseVerifierTask {
  AssignmentPlan candidate;
  eval::VerifierTask rendered;
  CourseVerifierTruth ground_truth;
};

// Emits the exact solution or a corrupted plan at even odds; the label is
// whatever assess() says about the emitted plan.
CourseVerifierTask build_course_verifier_task(const CourseInstanceRecord& record,
                                              std::uint64_t seed,
                                              double delta = kDefaultDelta);

}  // namespace planbench::course
