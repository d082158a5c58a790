#pragma once

#include <vector>

#include "planbench/fitness/feasibility.hpp"
#include "planbench/fitness/types.hpp"

namespace planbench::fitness {

// Preference-weighted volume sum(u_i * p_i) of a plan.
double plan_utility(const FitnessPlan& plan, const std::vector<double>& preferences);

// The constrained-optimal reps vector: maximize sum(u_i * p_i) subject to
// sum(t_i * p_i) <= T and 0 <= p_i <= max_reps, restricted to exercises
// admissible under the boolean constraints (gym access, exclusions). Exact
// bounded-knapsack dynamic program over the time budget; ties resolve to the
// lexicographically smallest reps vector, so the oracle is deterministic.
FitnessPlan desired_plan(const UserProfile& profile, const ExerciseBank& bank);

// Same, with active emergencies folded in first (reduced budget, widened
// exclusions).
FitnessPlan desired_plan(const UserProfile& profile, const ExerciseBank& bank,
                         const std::vector<EmergencyCondition>& active_emergencies);

}  // namespace planbench::fitness
