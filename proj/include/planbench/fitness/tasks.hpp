#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planbench/eval/tasks.hpp"
#include "planbench/fitness/types.hpp"
#include "planbench/rng.hpp"

namespace planbench::fitness {

enum class TaskMode { ZeroShot, FewShot };

// Randomized but seed-deterministic profile compatible with `bank`; the
// sampled user always has at least one admissible exercise within budget.
UserProfile sample_profile(const ExerciseBank& bank, Rng& rng);

// A random feasible plan under the current constraints (may be all-zero only
// if nothing is admissible, which sample_profile rules out).
FitnessPlan random_feasible_plan(const UserProfile& profile, const ExerciseBank& bank,
                                 const std::vector<EmergencyCondition>& emergencies,
                                 Rng& rng);

struct FitnessVerifierTask {
  UserProfile profile;
  FitnessPlan candidate;
  std::vector<EmergencyCondition> active_emergencies;
  EpisodeState history;  // empty in zero-shot mode
  eval::VerifierTask rendered;
  bool ground_truth = false;
};

// Zero-shot: fresh profile plus a candidate plan, feasible or singly
// violated at even odds. Few-shot: a short scripted rollout supplies the
// history and the question is about the final plan. The label is always
// recomputed from check_feasibility on the emitted task.
FitnessVerifierTask build_verifier_task(TaskMode mode, std::uint64_t seed,
                                        const ExerciseBank& bank,
                                        const EmergencyBank& emergencies);
FitnessVerifierTask build_verifier_task(TaskMode mode, std::uint64_t seed);

struct FitnessRankingTask {
  UserProfile profile;
  std::vector<FitnessPlan> candidates;  // in presentation order
  std::vector<EmergencyCondition> active_emergencies;
  EpisodeState history;
  EpisodeConfig config;  // weights used for the oracle scores
  eval::RankingTask rendered;
  std::vector<std::size_t> oracle_order;
};

// Samples n feasible candidates around the desired plan at graded
// perturbation distances, scores each with the satisfaction function, and
// returns the descending oracle order. All candidate scores are pairwise
// distinct; if grading keeps colliding after bounded resampling the builder
// gives up with DegenerateTask.
FitnessRankingTask build_heuristic_task(TaskMode mode, int n_candidates,
                                        std::uint64_t seed, const ExerciseBank& bank,
                                        const EmergencyBank& emergencies);
FitnessRankingTask build_heuristic_task(TaskMode mode, int n_candidates,
                                        std::uint64_t seed);

}  // namespace planbench::fitness
