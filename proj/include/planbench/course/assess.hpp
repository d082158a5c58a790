#pragma once

#include "planbench/course/types.hpp"

namespace planbench::course {

inline constexpr double kDefaultDelta = 1.3;

// Grades a (possibly partial) plan: completeness, the three feasibility
// constraints, total seat slack, occupancy ratio, and the occupancy
// threshold. Throws UnknownReference if the plan names sections or rooms the
// instance does not have.
PlanAssessment assess(const AssignmentPlan& plan, const CourseInstance& instance,
                      double delta = kDefaultDelta);

// The objective printed as J(P) > delta: the raw seat-slack sum compared
// against delta directly. Exposed for strict-fidelity comparisons; the
// occupancy-ratio reading above is what assess() uses.
bool raw_slack_exceeds_delta(const AssignmentPlan& plan, const CourseInstance& instance,
                             double delta = kDefaultDelta);

}  // namespace planbench::course
