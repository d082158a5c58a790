#pragma once

#include <vector>

#include "planbench/fitness/types.hpp"

namespace planbench::fitness {

// Mean preference of the selected exercises, scaled to [0, 1]. An all-zero
// plan selects nothing and scores 0 (the formula is undefined there).
double plan_score(const FitnessPlan& plan, const std::vector<double>& preferences);

// Cosine similarity of the rep vectors times min(1, |P|/|D|, |D|/|P|).
// Zero if either vector is all-zero. Range [0, 1] for non-negative reps.
double rep_score(const FitnessPlan& plan, const FitnessPlan& desired);

// Minus the fraction of exercises used (nonzero reps) in at least one plan
// of the window, range [-1, 0]. With positive_range the value is remapped to
// 1 - used-fraction.
double overlap_score(const std::vector<FitnessPlan>& history_window,
                     bool positive_range = false);

// F_t = 10 * (alpha*Plan + beta*Rep + (1-alpha-beta)*Overlap). Rep is taken
// against the desired plan recomputed under the state's active emergencies;
// Overlap covers the last config.overlap_window plans including `plan`.
// Callers must have established feasibility first; infeasible plans get a
// complaint, not a score.
double feedback_score(const FitnessPlan& plan, const EpisodeState& state,
                      const UserProfile& profile, const ExerciseBank& bank,
                      const EpisodeConfig& config);

}  // namespace planbench::fitness
