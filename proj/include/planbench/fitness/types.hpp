#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace planbench::fitness {

struct MismatchedDimensions : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EmptyWindow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EpisodeFinished : std::logic_error {
  using std::logic_error::logic_error;
};
struct DegenerateTask : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Intensity { Low, Medium, High };
enum class Category { Aerobic, Anaerobic };
enum class Stamina { Low, Medium, High };

struct ExerciseSpec {
  std::string name;
  int duration_minutes = 1;  // >= 1
  Intensity intensity = Intensity::Medium;
  bool gym_required = false;
  Category category = Category::Aerobic;
  std::set<std::string> muscle_groups;
};

using ExerciseBank = std::vector<ExerciseSpec>;

// The simulated user. `preferences` is the hidden utility vector; agents in
// the solver role never see it, verifier/ranker tasks include it.
struct UserProfile {
  std::string name;
  std::vector<double> preferences;  // each in [0, 10], length == bank size
  int available_time_minutes = 60;  // > 0
  bool gym_access = false;
  Stamina stamina = Stamina::Medium;
  int max_reps = 5;  // > 0
  std::set<std::string> excluded_muscle_groups;
};

struct FitnessPlan {
  std::vector<int> reps;  // non-negative, length == bank size

  bool all_zero() const {
    for (int r : reps)
      if (r != 0) return false;
    return true;
  }
};

// Effects an emergency condition can have on subsequent plans.
struct ExcludeMuscleGroup {
  std::string group;
};
struct ReduceAvailableTime {
  int delta_minutes = 1;  // >= 1
};
struct ExcludeExercise {
  std::string name;
};

struct EmergencyCondition {
  std::string description;  // natural-language complaint
  std::variant<ExcludeMuscleGroup, ReduceAvailableTime, ExcludeExercise> effect;
};

using EmergencyBank = std::vector<EmergencyCondition>;

struct EpisodeConfig {
  double alpha = 0.4;             // weight of the selection score
  double beta = 0.4;              // weight of the reps score
  double emergency_probability = 0.2;
  int overlap_window = 3;         // plans per diversity window, current included
  int iterations = 10;
  std::uint64_t seed = 0;
  // The diversity term as printed is non-positive; this remaps it to
  // 1 - used-fraction for consumers who want a [0, 1] range.
  bool overlap_positive = false;
  double cost_utility_threshold = 0.95;

  void validate() const {
    if (alpha < 0 || beta < 0 || alpha + beta > 1.0)
      throw std::invalid_argument("EpisodeConfig: need alpha, beta >= 0 and alpha + beta <= 1");
    if (overlap_window < 1) throw std::invalid_argument("EpisodeConfig: overlap_window >= 1");
    if (iterations < 1) throw std::invalid_argument("EpisodeConfig: iterations >= 1");
  }
};

struct Feedback {
  double satisfaction = 0.0;  // 0 when infeasible (no score is issued)
  bool feasible = false;
  std::vector<std::string> violations;
  std::optional<EmergencyCondition> emergency;
};

struct EpisodeState {
  std::vector<FitnessPlan> plan_history;
  std::vector<Feedback> feedback_history;
  std::vector<EmergencyCondition> active_emergencies;
  int iteration = 0;
};

const char* to_string(Intensity v);
const char* to_string(Category v);
const char* to_string(Stamina v);
Intensity intensity_from_string(const std::string& s);
Category category_from_string(const std::string& s);
Stamina stamina_from_string(const std::string& s);

}  // namespace planbench::fitness
