#include "planbench/fitness/feasibility.hpp"

#include <algorithm>

namespace planbench::fitness {

EffectiveConstraints apply_emergencies(
    const UserProfile& profile,
    const std::vector<EmergencyCondition>& active_emergencies) {
  EffectiveConstraints eff;
  eff.available_time_minutes = profile.available_time_minutes;
  eff.excluded_muscle_groups = profile.excluded_muscle_groups;
  for (const auto& em : active_emergencies) {
    if (const auto* mg = std::get_if<ExcludeMuscleGroup>(&em.effect)) {
      eff.excluded_muscle_groups.insert(mg->group);
    } else if (const auto* rt = std::get_if<ReduceAvailableTime>(&em.effect)) {
      eff.available_time_minutes -= rt->delta_minutes;
    } else if (const auto* ex = std::get_if<ExcludeExercise>(&em.effect)) {
      eff.excluded_exercises.insert(ex->name);
    }
  }
  eff.available_time_minutes = std::max(0, eff.available_time_minutes);
  return eff;
}

int plan_minutes(const FitnessPlan& plan, const ExerciseBank& bank) {
  if (plan.reps.size() != bank.size())
    throw MismatchedDimensions("plan_minutes: plan length " +
                               std::to_string(plan.reps.size()) + " vs bank " +
                               std::to_string(bank.size()));
  int total = 0;
  for (std::size_t i = 0; i < bank.size(); ++i)
    total += plan.reps[i] * bank[i].duration_minutes;
  return total;
}

FeasibilityResult check_feasibility(
    const FitnessPlan& plan, const UserProfile& profile, const ExerciseBank& bank,
    const std::vector<EmergencyCondition>& active_emergencies) {
  if (plan.reps.size() != bank.size())
    throw MismatchedDimensions("check_feasibility: plan length " +
                               std::to_string(plan.reps.size()) + " vs bank " +
                               std::to_string(bank.size()));

  const EffectiveConstraints eff = apply_emergencies(profile, active_emergencies);
  FeasibilityResult result;

  const int total = plan_minutes(plan, bank);
  if (total > eff.available_time_minutes) {
    result.violations.push_back(
        "time budget exceeded: the plan takes " + std::to_string(total) +
        " minutes but only " + std::to_string(eff.available_time_minutes) +
        " are available");
  }

  for (std::size_t i = 0; i < bank.size(); ++i) {
    const int reps = plan.reps[i];
    if (reps == 0) continue;
    const ExerciseSpec& ex = bank[i];
    if (reps > profile.max_reps) {
      result.violations.push_back(ex.name + ": " + std::to_string(reps) +
                                  " reps exceed the maximum of " +
                                  std::to_string(profile.max_reps));
    }
    if (ex.gym_required && !profile.gym_access) {
      result.violations.push_back(ex.name + " requires gym equipment, which is not available");
    }
    if (eff.excluded_exercises.count(ex.name) > 0) {
      result.violations.push_back(ex.name + " must currently be avoided");
    }
    for (const auto& group : ex.muscle_groups) {
      if (eff.excluded_muscle_groups.count(group) > 0) {
        result.violations.push_back(ex.name + " engages the " + group +
                                    " muscle group, which must be avoided");
        break;
      }
    }
  }

  result.feasible = result.violations.empty();
  return result;
}

}  // namespace planbench::fitness
