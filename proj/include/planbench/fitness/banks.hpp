#pragma once

#include <string>
#include <vector>

#include "planbench/fitness/types.hpp"

namespace planbench::fitness {

// Built-in banks; identical content ships as JSON under data/fitness/ for
// external tooling. The exercise bank starts with the eight canonical
// entries every default profile's preference vector is aligned to.
ExerciseBank default_exercise_bank();
EmergencyBank default_emergency_bank();
std::vector<UserProfile> default_user_bank();

ExerciseBank load_exercise_bank(const std::string& path);
EmergencyBank load_emergency_bank(const std::string& path);
std::vector<UserProfile> load_user_bank(const std::string& path);

void save_exercise_bank(const ExerciseBank& bank, const std::string& path);
void save_emergency_bank(const EmergencyBank& bank, const std::string& path);
void save_user_bank(const std::vector<UserProfile>& users, const std::string& path);

}  // namespace planbench::fitness
