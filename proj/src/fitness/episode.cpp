#include "planbench/fitness/episode.hpp"

#include <algorithm>
#include <json.hpp>

#include "planbench/fitness/feasibility.hpp"
#include "planbench/fitness/oracle.hpp"
#include "planbench/fitness/scoring.hpp"

namespace planbench::fitness {

SolverView make_solver_view(const UserProfile& profile, const ExerciseBank& bank,
                            const EpisodeState& state) {
  SolverView view;
  view.bank = &bank;
  view.available_time_minutes = profile.available_time_minutes;
  view.gym_access = profile.gym_access;
  view.stamina = profile.stamina;
  view.max_reps = profile.max_reps;
  view.excluded_muscle_groups = profile.excluded_muscle_groups;
  view.plan_history = &state.plan_history;
  view.feedback_history = &state.feedback_history;
  view.active_emergencies = &state.active_emergencies;
  return view;
}

Feedback step(EpisodeState& state, const FitnessPlan& plan, const UserProfile& profile,
              const ExerciseBank& bank, const EpisodeConfig& config, Rng& rng,
              const EmergencyBank& emergencies) {
  config.validate();
  if (state.iteration >= config.iterations)
    throw EpisodeFinished("episode already ran " + std::to_string(config.iterations) +
                          " iterations");

  Feedback feedback;
  const FeasibilityResult check = check_feasibility(plan, profile, bank,
                                                    state.active_emergencies);
  feedback.feasible = check.feasible;
  feedback.violations = check.violations;
  if (check.feasible) {
    feedback.satisfaction = feedback_score(plan, state, profile, bank, config);
  }

  // New constraints take effect from the next plan onward; the current plan
  // was judged under the conditions it was written for.
  if (!emergencies.empty() && rng.bernoulli(config.emergency_probability)) {
    EmergencyCondition drawn = emergencies[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(emergencies.size()) - 1))];
    state.active_emergencies.push_back(drawn);
    feedback.emergency = std::move(drawn);
  }

  state.plan_history.push_back(plan);
  state.feedback_history.push_back(feedback);
  ++state.iteration;
  return feedback;
}

EpisodeResult run_episode(SolverAgent& agent, const UserProfile& profile,
                          const ExerciseBank& bank, const EpisodeConfig& config,
                          const EmergencyBank& emergencies) {
  config.validate();
  EpisodeResult result;
  EpisodeState& state = result.state;
  Rng rng(config.seed);

  int feasible_count = 0;
  int failures = 0;
  std::vector<double> scores;  // F_t per iteration, 0 when infeasible
  int reached_at = config.iterations + 1;

  for (int t = 1; t <= config.iterations; ++t) {
    std::optional<FitnessPlan> proposal;
    try {
      proposal = agent.propose(make_solver_view(profile, bank, state));
    } catch (const std::exception&) {
      proposal.reset();
    }
    if (proposal && proposal->reps.size() != bank.size()) proposal.reset();

    // Reference score for this iteration, judged under the same history.
    const FitnessPlan oracle = desired_plan(profile, bank, state.active_emergencies);
    const double max_f = feedback_score(oracle, state, profile, bank, config);
    result.max_feedback.push_back(max_f);

    FitnessPlan plan;
    bool agent_failed = false;
    if (proposal) {
      plan = std::move(*proposal);
    } else {
      plan.reps.assign(bank.size(), 0);
      agent_failed = true;
      ++failures;
    }

    Feedback feedback = step(state, plan, profile, bank, config, rng, emergencies);
    if (agent_failed) {
      feedback.feasible = false;
      feedback.violations = {"agent failure: no parseable plan was produced"};
      feedback.satisfaction = 0.0;
      state.feedback_history.back() = feedback;
    }

    if (feedback.feasible) ++feasible_count;
    const double f = feedback.feasible ? feedback.satisfaction : 0.0;
    scores.push_back(f);
    if (reached_at > config.iterations && feedback.feasible &&
        f >= config.cost_utility_threshold * max_f) {
      reached_at = t;
    }
  }

  SolverMetrics& m = result.metrics;
  m.feasibility = static_cast<double>(feasible_count) / config.iterations;
  const int tail = std::min(3, config.iterations);
  double sum = 0.0;
  for (int i = config.iterations - tail; i < config.iterations; ++i)
    sum += std::max(scores[static_cast<std::size_t>(i)], 0.0) / 10.0;
  m.optimality = sum / tail;
  m.cost_utility = reached_at;
  m.agent_failures = failures;

  std::size_t used = 0;
  for (std::size_t i = 0; i < bank.size(); ++i) {
    for (const auto& p : state.plan_history) {
      if (p.reps[i] != 0) {
        ++used;
        break;
      }
    }
  }
  m.diversity = bank.empty() ? 0.0 : static_cast<double>(used) / static_cast<double>(bank.size());
  return result;
}

std::string transcript_jsonl(const EpisodeState& state) {
  std::string out;
  for (std::size_t i = 0; i < state.plan_history.size(); ++i) {
    nlohmann::json row;
    row["iteration"] = i + 1;
    row["plan"] = state.plan_history[i].reps;
    const Feedback& fb = state.feedback_history[i];
    row["feasible"] = fb.feasible;
    row["violations"] = fb.violations;
    row["satisfaction"] = fb.satisfaction;
    if (fb.emergency) {
      nlohmann::json em;
      em["description"] = fb.emergency->description;
      if (const auto* mg = std::get_if<ExcludeMuscleGroup>(&fb.emergency->effect)) {
        em["effect"] = {{"type", "exclude_muscle_group"}, {"group", mg->group}};
      } else if (const auto* rt = std::get_if<ReduceAvailableTime>(&fb.emergency->effect)) {
        em["effect"] = {{"type", "reduce_available_time"}, {"delta_minutes", rt->delta_minutes}};
      } else if (const auto* ex = std::get_if<ExcludeExercise>(&fb.emergency->effect)) {
        em["effect"] = {{"type", "exclude_exercise"}, {"name", ex->name}};
      }
      row["emergency"] = em;
    } else {
      row["emergency"] = nullptr;
    }
    out += row.dump();
    out += '\n';
  }
  return out;
}

}  // namespace planbench::fitness
