#pragma once

#include <cstdint>

#include "planbench/course/types.hpp"
#include "planbench/rng.hpp"

namespace planbench::course {

// Edit distance under assign/reassign operations: the number of sections
// that are unassigned in `candidate` or mapped to a different room than in
// `gold`. Smaller is better; this is the oracle scorer for ranking tasks.
int plan_distance(const AssignmentPlan& candidate, const AssignmentPlan& gold,
                  const CourseInstance& instance);

// Keeps a random subset of ceil(keep_fraction * m) assignments (a plausible
// intermediate state), then rewires each kept entry to a random different
// room with probability alter_rate. Deterministic per seed.
AssignmentPlan corrupt_plan(const AssignmentPlan& gold, const CourseInstance& instance,
                            double keep_fraction, double alter_rate, std::uint64_t seed);

}  // namespace planbench::course
