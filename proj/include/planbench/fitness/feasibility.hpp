#pragma once

#include <set>
#include <string>
#include <vector>

#include "planbench/fitness/types.hpp"

namespace planbench::fitness {

// Constraints as they stand after folding active emergencies into the
// profile: reduced time budget, widened muscle-group exclusions, plus
// exercises banned by name.
struct EffectiveConstraints {
  int available_time_minutes = 0;
  std::set<std::string> excluded_muscle_groups;
  std::set<std::string> excluded_exercises;
};

EffectiveConstraints apply_emergencies(
    const UserProfile& profile,
    const std::vector<EmergencyCondition>& active_emergencies);

struct FeasibilityResult {
  bool feasible = false;
  std::vector<std::string> violations;  // one human-readable complaint each
};

// A plan is feasible iff its total time fits the effective budget, every rep
// count is within max_reps, no gym-required exercise is selected without gym
// access, and no selected exercise touches an excluded muscle group or is
// banned outright.
FeasibilityResult check_feasibility(
    const FitnessPlan& plan, const UserProfile& profile, const ExerciseBank& bank,
    const std::vector<EmergencyCondition>& active_emergencies = {});

// Total minutes the plan takes.
int plan_minutes(const FitnessPlan& plan, const ExerciseBank& bank);

}  // namespace planbench::fitness
