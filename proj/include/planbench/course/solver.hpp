#pragma once

#include <optional>

#include "planbench/course/types.hpp"

namespace planbench::course {

struct Solution {
  AssignmentPlan plan;
  int optimal_slack = 0;
};

// Exact minimum-slack assignment via branch and bound: sections in
// decreasing-enrollment order, rooms per section in increasing-slack order,
// pruned by a per-section best-case slack bound and by conflicts as they
// appear. Ties break toward the lower room index. Returns nullopt when no
// feasible assignment exists.
std::optional<Solution> solve_exact(const CourseInstance& instance);

// Full enumeration over rooms^sections assignments; the independent oracle
// for solve_exact. Guarded: throws TooLarge when the search space exceeds
// 10^7 nodes.
std::optional<Solution> brute_force_solve(const CourseInstance& instance);

}  // namespace planbench::course
