#include "planbench/fitness/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "planbench/fitness/banks.hpp"
#include "planbench/fitness/episode.hpp"
#include "planbench/fitness/feasibility.hpp"
#include "planbench/fitness/oracle.hpp"
#include "planbench/fitness/render.hpp"
#include "planbench/fitness/scoring.hpp"

namespace planbench::fitness {

namespace {

constexpr int kBuildRetries = 20;

std::vector<std::string> bank_muscle_groups(const ExerciseBank& bank) {
  std::set<std::string> groups;
  for (const auto& ex : bank) groups.insert(ex.muscle_groups.begin(), ex.muscle_groups.end());
  return {groups.begin(), groups.end()};
}

bool admissible(const ExerciseSpec& ex, const UserProfile& profile,
                const EffectiveConstraints& eff) {
  if (ex.gym_required && !profile.gym_access) return false;
  if (eff.excluded_exercises.count(ex.name) > 0) return false;
  for (const auto& g : ex.muscle_groups)
    if (eff.excluded_muscle_groups.count(g) > 0) return false;
  return true;
}

// Scripted exploration used to fabricate few-shot histories. Proposals are
// random feasible plans; no learning is needed, only plausible transcripts.
EpisodeState sample_history(const UserProfile& profile, const ExerciseBank& bank,
                            const EmergencyBank& emergencies, const EpisodeConfig& config,
                            int steps, Rng& rng) {
  EpisodeState state;
  Rng step_rng = rng.fork(0x68697374);
  for (int t = 0; t < steps; ++t) {
    const FitnessPlan plan =
        random_feasible_plan(profile, bank, state.active_emergencies, rng);
    step(state, plan, profile, bank, config, step_rng, emergencies);
  }
  return state;
}

// Tries to break one constraint of an otherwise feasible plan. Returns
// nullopt when the profile offers no way to realize the picked violation.
std::optional<FitnessPlan> inject_violation(const FitnessPlan& base,
                                            const UserProfile& profile,
                                            const ExerciseBank& bank,
                                            const EffectiveConstraints& eff, Rng& rng) {
  std::vector<int> strategies = {0, 1, 2, 3};
  rng.shuffle(strategies);
  for (int strategy : strategies) {
    FitnessPlan plan = base;
    switch (strategy) {
      case 0: {  // oversubscribe the time budget
        std::vector<std::size_t> order(bank.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
          return bank[a].duration_minutes > bank[b].duration_minutes;
        });
        for (std::size_t i : order) {
          if (!admissible(bank[i], profile, eff)) continue;
          while (plan.reps[i] < profile.max_reps &&
                 plan_minutes(plan, bank) <= eff.available_time_minutes)
            ++plan.reps[i];
          if (plan_minutes(plan, bank) > eff.available_time_minutes) return plan;
        }
        break;
      }
      case 1: {  // gym-required exercise without gym access
        if (profile.gym_access) break;
        for (std::size_t i = 0; i < bank.size(); ++i) {
          if (bank[i].gym_required) {
            plan.reps[i] = std::max(plan.reps[i], 1);
            return plan;
          }
        }
        break;
      }
      case 2: {  // touch an excluded muscle group
        for (std::size_t i = 0; i < bank.size(); ++i) {
          bool touches = false;
          for (const auto& g : bank[i].muscle_groups)
            if (eff.excluded_muscle_groups.count(g) > 0) touches = true;
          if (touches) {
            plan.reps[i] = std::max(plan.reps[i], 1);
            return plan;
          }
        }
        break;
      }
      case 3: {  // exceed max_reps on some admissible exercise
        for (std::size_t i = 0; i < bank.size(); ++i) {
          if (admissible(bank[i], profile, eff)) {
            plan.reps[i] = profile.max_reps + 1;
            return plan;
          }
        }
        break;
      }
    }
  }
  return std::nullopt;
}

std::string verifier_problem_text(const UserProfile& profile, const ExerciseBank& bank) {
  std::ostringstream out;
  out << render_bank(bank) << "\n"
      << render_constraints(profile) << "\n"
      << render_preferences(profile, bank);
  return out.str();
}

}  // namespace

UserProfile sample_profile(const ExerciseBank& bank, Rng& rng) {
  const std::vector<std::string> groups = bank_muscle_groups(bank);
  for (int attempt = 0; attempt < kBuildRetries; ++attempt) {
    UserProfile profile;
    profile.name = "user-" + std::to_string(rng.uniform_int(1000, 9999));
    profile.preferences.resize(bank.size());
    for (auto& u : profile.preferences)
      u = static_cast<double>(rng.uniform_int(0, 100)) / 10.0;
    profile.available_time_minutes = static_cast<int>(rng.uniform_int(40, 120));
    profile.gym_access = rng.bernoulli(0.5);
    profile.stamina = static_cast<Stamina>(rng.uniform_int(0, 2));
    profile.max_reps = static_cast<int>(rng.uniform_int(3, 5));
    if (!groups.empty() && rng.bernoulli(0.25))
      profile.excluded_muscle_groups.insert(rng.pick(groups));
    if (!desired_plan(profile, bank).all_zero()) return profile;
  }
  throw DegenerateTask("sample_profile: no admissible exercise fits any sampled budget");
}

FitnessPlan random_feasible_plan(const UserProfile& profile, const ExerciseBank& bank,
                                 const std::vector<EmergencyCondition>& emergencies,
                                 Rng& rng) {
  const EffectiveConstraints eff = apply_emergencies(profile, emergencies);
  FitnessPlan plan;
  plan.reps.assign(bank.size(), 0);
  std::vector<std::size_t> order(bank.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  int remaining = eff.available_time_minutes;
  for (std::size_t i : order) {
    if (!admissible(bank[i], profile, eff)) continue;
    const int cap = std::min<int>(profile.max_reps, remaining / bank[i].duration_minutes);
    if (cap <= 0) continue;
    // Thin out selections so plans stay varied rather than saturated.
    if (rng.bernoulli(0.4)) continue;
    const int reps = static_cast<int>(rng.uniform_int(0, cap));
    plan.reps[i] = reps;
    remaining -= reps * bank[i].duration_minutes;
  }
  return plan;
}

FitnessVerifierTask build_verifier_task(TaskMode mode, std::uint64_t seed) {
  return build_verifier_task(mode, seed, default_exercise_bank(), default_emergency_bank());
}

FitnessVerifierTask build_verifier_task(TaskMode mode, std::uint64_t seed,
                                        const ExerciseBank& bank,
                                        const EmergencyBank& emergencies) {
  Rng rng(seed);
  FitnessVerifierTask task;
  task.profile = sample_profile(bank, rng);

  EpisodeConfig config;
  config.emergency_probability = 0.15;
  config.iterations = 8;
  if (mode == TaskMode::FewShot) {
    const int steps = static_cast<int>(rng.uniform_int(2, 4));
    task.history = sample_history(task.profile, bank, emergencies, config, steps, rng);
    task.active_emergencies = task.history.active_emergencies;
  }

  const bool want_feasible = rng.bernoulli(0.5);
  const EffectiveConstraints eff = apply_emergencies(task.profile, task.active_emergencies);
  for (int attempt = 0; attempt < kBuildRetries; ++attempt) {
    FitnessPlan candidate =
        rng.bernoulli(0.5)
            ? desired_plan(task.profile, bank, task.active_emergencies)
            : random_feasible_plan(task.profile, bank, task.active_emergencies, rng);
    if (!want_feasible) {
      auto broken = inject_violation(candidate, task.profile, bank, eff, rng);
      if (!broken) continue;
      candidate = std::move(*broken);
    }
    const FeasibilityResult check =
        check_feasibility(candidate, task.profile, bank, task.active_emergencies);
    if (check.feasible != want_feasible) continue;
    task.candidate = std::move(candidate);
    task.ground_truth = check.feasible;
    task.rendered.problem_text = verifier_problem_text(task.profile, bank);
    task.rendered.candidate_text = render_plan(task.candidate, bank);
    if (mode == TaskMode::FewShot)
      task.rendered.context_text = render_history(task.history, bank);
    return task;
  }
  throw DegenerateTask("build_verifier_task: could not realize the requested label");
}

FitnessRankingTask build_heuristic_task(TaskMode mode, int n_candidates,
                                        std::uint64_t seed) {
  return build_heuristic_task(mode, n_candidates, seed, default_exercise_bank(),
                              default_emergency_bank());
}

FitnessRankingTask build_heuristic_task(TaskMode mode, int n_candidates,
                                        std::uint64_t seed, const ExerciseBank& bank,
                                        const EmergencyBank& emergencies) {
  if (n_candidates < 2)
    throw std::invalid_argument("build_heuristic_task: need at least 2 candidates");
  Rng rng(seed);

  FitnessRankingTask task;
  task.profile = sample_profile(bank, rng);
  task.config = EpisodeConfig{};
  task.config.seed = seed;
  if (mode == TaskMode::FewShot) {
    const int steps = static_cast<int>(rng.uniform_int(2, 4));
    task.history =
        sample_history(task.profile, bank, emergencies, task.config, steps, rng);
    task.active_emergencies = task.history.active_emergencies;
  }

  const FitnessPlan desired = desired_plan(task.profile, bank, task.active_emergencies);

  for (int attempt = 0; attempt < kBuildRetries; ++attempt) {
    std::vector<FitnessPlan> candidates;
    std::vector<double> scores;
    bool ok = true;
    for (int c = 0; c < n_candidates && ok; ++c) {
      // Candidate c mutates the desired plan at c grades of distance; grade 0
      // is the oracle plan itself.
      FitnessPlan plan = desired;
      for (int edit = 0; edit < c; ++edit) {
        for (int tries = 0; tries < kBuildRetries; ++tries) {
          FitnessPlan tweaked = plan;
          const std::size_t i =
              static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(bank.size()) - 1));
          tweaked.reps[i] = static_cast<int>(rng.uniform_int(0, task.profile.max_reps));
          if (tweaked.reps == plan.reps) continue;
          if (check_feasibility(tweaked, task.profile, bank, task.active_emergencies).feasible) {
            plan = std::move(tweaked);
            break;
          }
        }
      }
      const double score =
          feedback_score(plan, task.history, task.profile, bank, task.config);
      for (std::size_t other = 0; other < scores.size(); ++other) {
        if (std::abs(scores[other] - score) < 1e-9 || candidates[other].reps == plan.reps)
          ok = false;
      }
      candidates.push_back(std::move(plan));
      scores.push_back(score);
    }
    if (!ok) continue;

    // Presentation order must not leak the oracle ordering.
    std::vector<std::size_t> shuffle_order(candidates.size());
    for (std::size_t i = 0; i < shuffle_order.size(); ++i) shuffle_order[i] = i;
    rng.shuffle(shuffle_order);
    task.candidates.clear();
    task.rendered = {};
    std::vector<double> shuffled_scores;
    for (std::size_t i : shuffle_order) {
      task.candidates.push_back(candidates[i]);
      shuffled_scores.push_back(scores[i]);
    }

    task.rendered.problem_text = verifier_problem_text(task.profile, bank);
    for (const auto& plan : task.candidates)
      task.rendered.candidate_texts.push_back(render_plan(plan, bank));
    if (mode == TaskMode::FewShot)
      task.rendered.context_text = render_history(task.history, bank);
    task.rendered.oracle_scores = shuffled_scores;
    task.rendered.orientation = eval::Orientation::HigherBetter;
    task.oracle_order =
        eval::rank_by_scores(shuffled_scores, eval::Orientation::HigherBetter);
    return task;
  }
  throw DegenerateTask("build_heuristic_task: candidate scores kept colliding");
}

}  // namespace planbench::fitness
