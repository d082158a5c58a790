#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planbench/fitness/types.hpp"
#include "planbench/rng.hpp"

namespace planbench::fitness {

// What a solver agent is allowed to see when proposing the next plan: the
// exercise bank, the boolean/integer constraints, announced emergencies and
// the episode history. The hidden preference vector is deliberately absent.
struct SolverView {
  const ExerciseBank* bank = nullptr;
  int available_time_minutes = 0;  // base budget, before emergencies
  bool gym_access = false;
  Stamina stamina = Stamina::Medium;
  int max_reps = 0;
  std::set<std::string> excluded_muscle_groups;
  const std::vector<FitnessPlan>* plan_history = nullptr;
  const std::vector<Feedback>* feedback_history = nullptr;
  const std::vector<EmergencyCondition>* active_emergencies = nullptr;
};

SolverView make_solver_view(const UserProfile& profile, const ExerciseBank& bank,
                            const EpisodeState& state);

// A plan-proposing agent. Returning nullopt (or throwing) is graded as an
// agent failure for that iteration, never a crash of the episode.
class SolverAgent {
 public:
  virtual ~SolverAgent() = default;
  virtual std::string name() const = 0;
  virtual std::optional<FitnessPlan> propose(const SolverView& view) = 0;
};

// Advances the episode by one iteration: checks the plan, scores it if
// feasible, possibly draws an emergency (probability config.emergency_
// probability), and appends plan and feedback to the histories. Deterministic
// given the rng state.
Feedback step(EpisodeState& state, const FitnessPlan& plan, const UserProfile& profile,
              const ExerciseBank& bank, const EpisodeConfig& config, Rng& rng,
              const EmergencyBank& emergencies);

struct SolverMetrics {
  double feasibility = 0.0;   // fraction of iterations with a feasible plan
  double optimality = 0.0;    // mean clamped normalized score, final 3 iterations
  int cost_utility = 0;       // first iteration reaching the threshold, or iterations+1
  double diversity = 0.0;     // exercises touched across all plans / bank size
  int agent_failures = 0;
};

struct EpisodeResult {
  EpisodeState state;
  SolverMetrics metrics;
  // Per-iteration reference score: feedback of the oracle-desired plan under
  // the same history and emergencies. Drives the cost-utility threshold.
  std::vector<double> max_feedback;
};

EpisodeResult run_episode(SolverAgent& agent, const UserProfile& profile,
                          const ExerciseBank& bank, const EpisodeConfig& config,
                          const EmergencyBank& emergencies);

// One transcript row per iteration:
// {iteration, plan, feasible, violations, satisfaction, emergency}.
std::string transcript_jsonl(const EpisodeState& state);

}  // namespace planbench::fitness
