#pragma once

#include <string>
#include <vector>

#include "planbench/fitness/types.hpp"

namespace planbench::fitness {

// Text renderings shared by task builders and prompt assembly. All output is
// deterministic for a given input.
std::string render_bank(const ExerciseBank& bank);
std::string render_constraints(const UserProfile& profile);
std::string render_preferences(const UserProfile& profile, const ExerciseBank& bank);
std::string render_plan(const FitnessPlan& plan, const ExerciseBank& bank);
std::string render_emergency(const EmergencyCondition& emergency);

// Interleaves plans and their feedback as P_0, F_0, P_1, F_1, ...; F_j is
// the feedback the next plan responded to, and a question about the plan
// after the history never sees its own feedback.
std::string render_history(const EpisodeState& state, const ExerciseBank& bank);

}  // namespace planbench::fitness
