#include "planbench/fitness/oracle.hpp"

#include <algorithm>

namespace planbench::fitness {

double plan_utility(const FitnessPlan& plan, const std::vector<double>& preferences) {
  if (plan.reps.size() != preferences.size())
    throw MismatchedDimensions("plan_utility: plan length " +
                               std::to_string(plan.reps.size()) + " vs preferences " +
                               std::to_string(preferences.size()));
  double total = 0.0;
  for (std::size_t i = 0; i < plan.reps.size(); ++i)
    total += preferences[i] * plan.reps[i];
  return total;
}

FitnessPlan desired_plan(const UserProfile& profile, const ExerciseBank& bank) {
  return desired_plan(profile, bank, {});
}

FitnessPlan desired_plan(const UserProfile& profile, const ExerciseBank& bank,
                         const std::vector<EmergencyCondition>& active_emergencies) {
  const std::size_t k = bank.size();
  if (profile.preferences.size() != k)
    throw MismatchedDimensions("desired_plan: preferences length " +
                               std::to_string(profile.preferences.size()) +
                               " vs bank " + std::to_string(k));

  const EffectiveConstraints eff = apply_emergencies(profile, active_emergencies);
  const int budget = eff.available_time_minutes;

  // An exercise is admissible when the boolean constraints allow any reps of
  // it at all; inadmissible ones are pinned to zero.
  std::vector<bool> admissible(k, true);
  for (std::size_t i = 0; i < k; ++i) {
    const ExerciseSpec& ex = bank[i];
    if (ex.gym_required && !profile.gym_access) admissible[i] = false;
    if (eff.excluded_exercises.count(ex.name) > 0) admissible[i] = false;
    for (const auto& group : ex.muscle_groups) {
      if (eff.excluded_muscle_groups.count(group) > 0) {
        admissible[i] = false;
        break;
      }
    }
  }

  // best[i][b]: max utility achievable with exercises i..k-1 and b minutes.
  // Filled back to front so reconstruction can walk i = 0..k-1 picking the
  // smallest rep count that still attains the optimum, which yields the
  // lexicographically smallest optimal vector.
  std::vector<std::vector<double>> best(k + 1, std::vector<double>(budget + 1, 0.0));
  for (std::size_t i = k; i-- > 0;) {
    for (int b = 0; b <= budget; ++b) {
      double value = best[i + 1][b];
      if (admissible[i]) {
        const int max_p = std::min(profile.max_reps, b / bank[i].duration_minutes);
        for (int p = 1; p <= max_p; ++p) {
          const double candidate =
              profile.preferences[i] * p + best[i + 1][b - p * bank[i].duration_minutes];
          value = std::max(value, candidate);
        }
      }
      best[i][b] = value;
    }
  }

  FitnessPlan plan;
  plan.reps.assign(k, 0);
  int b = budget;
  for (std::size_t i = 0; i < k; ++i) {
    if (!admissible[i]) continue;
    const int max_p = std::min(profile.max_reps, b / bank[i].duration_minutes);
    for (int p = 0; p <= max_p; ++p) {
      const double candidate =
          profile.preferences[i] * p + best[i + 1][b - p * bank[i].duration_minutes];
      if (candidate == best[i][b]) {
        plan.reps[i] = p;
        b -= p * bank[i].duration_minutes;
        break;
      }
    }
  }
  return plan;
}

}  // namespace planbench::fitness
