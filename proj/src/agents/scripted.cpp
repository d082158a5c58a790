#include "planbench/agents/scripted.hpp"

#include <algorithm>

#include "planbench/fitness/feasibility.hpp"
#include "planbench/fitness/oracle.hpp"

namespace planbench::agents {

namespace {

using fitness::EmergencyCondition;
using fitness::ExerciseBank;
using fitness::FitnessPlan;
using fitness::SolverAgent;
using fitness::SolverView;

// Constraints as visible to an honest agent: the base budget reduced by
// announced time cuts, exclusions widened by announced muscle-group bans.
struct VisibleConstraints {
  int time = 0;
  std::set<std::string> excluded_groups;
  std::set<std::string> excluded_exercises;
};

VisibleConstraints visible_constraints(const SolverView& view) {
  VisibleConstraints c;
  c.time = view.available_time_minutes;
  c.excluded_groups = view.excluded_muscle_groups;
  for (const auto& em : *view.active_emergencies) {
    if (const auto* mg = std::get_if<fitness::ExcludeMuscleGroup>(&em.effect)) {
      c.excluded_groups.insert(mg->group);
    } else if (const auto* rt = std::get_if<fitness::ReduceAvailableTime>(&em.effect)) {
      c.time -= rt->delta_minutes;
    } else if (const auto* ex = std::get_if<fitness::ExcludeExercise>(&em.effect)) {
      c.excluded_exercises.insert(ex->name);
    }
  }
  c.time = std::max(0, c.time);
  return c;
}

bool usable(const fitness::ExerciseSpec& ex, const SolverView& view,
            const VisibleConstraints& c) {
  if (ex.gym_required && !view.gym_access) return false;
  if (c.excluded_exercises.count(ex.name) > 0) return false;
  for (const auto& g : ex.muscle_groups)
    if (c.excluded_groups.count(g) > 0) return false;
  return true;
}

class RandomFitnessSolver final : public SolverAgent {
 public:
  explicit RandomFitnessSolver(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "scripted:random"; }

  std::optional<FitnessPlan> propose(const SolverView& view) override {
    const ExerciseBank& bank = *view.bank;
    const VisibleConstraints c = visible_constraints(view);
    FitnessPlan plan;
    plan.reps.assign(bank.size(), 0);
    std::vector<std::size_t> order(bank.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng_.shuffle(order);
    int remaining = c.time;
    for (std::size_t i : order) {
      if (!usable(bank[i], view, c)) continue;
      const int cap = std::min(view.max_reps, remaining / bank[i].duration_minutes);
      if (cap <= 0) continue;
      const int reps = static_cast<int>(rng_.uniform_int(0, cap));
      plan.reps[i] = reps;
      remaining -= reps * bank[i].duration_minutes;
    }
    return plan;
  }

 private:
  Rng rng_;
};

class ZeroFitnessSolver final : public SolverAgent {
 public:
  std::string name() const override { return "scripted:zero"; }
  std::optional<FitnessPlan> propose(const SolverView& view) override {
    FitnessPlan plan;
    plan.reps.assign(view.bank->size(), 0);
    return plan;
  }
};

class OracleFitnessSolver final : public SolverAgent {
 public:
  OracleFitnessSolver(fitness::UserProfile profile, ExerciseBank bank)
      : profile_(std::move(profile)), bank_(std::move(bank)) {}
  std::string name() const override { return "scripted:oracle"; }

  std::optional<FitnessPlan> propose(const SolverView& view) override {
    return fitness::desired_plan(profile_, bank_, *view.active_emergencies);
  }

 private:
  fitness::UserProfile profile_;
  ExerciseBank bank_;
};

// Keeps the best-scoring feasible plan seen so far and proposes single-step
// perturbations of it; adopts the previous proposal when its feedback beat
// the incumbent.
class HillClimbFitnessSolver final : public SolverAgent {
 public:
  explicit HillClimbFitnessSolver(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "scripted:hillclimb"; }

  std::optional<FitnessPlan> propose(const SolverView& view) override {
    const ExerciseBank& bank = *view.bank;
    const VisibleConstraints c = visible_constraints(view);

    if (!view.feedback_history->empty()) {
      const fitness::Feedback& last = view.feedback_history->back();
      const FitnessPlan& last_plan = view.plan_history->back();
      if (last.feasible && (!best_ || last.satisfaction > best_score_)) {
        best_ = last_plan;
        best_score_ = last.satisfaction;
      }
    }

    FitnessPlan plan;
    if (best_) {
      plan = *best_;
      // One random tweak; repair against the visible constraints afterward.
      const auto i = static_cast<std::size_t>(
          rng_.uniform_int(0, static_cast<std::int64_t>(bank.size()) - 1));
      plan.reps[i] = static_cast<int>(rng_.uniform_int(0, view.max_reps));
    } else {
      plan.reps.assign(bank.size(), 0);
      std::vector<std::size_t> order(bank.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      rng_.shuffle(order);
      int remaining = c.time;
      for (std::size_t i : order) {
        if (!usable(bank[i], view, c)) continue;
        const int cap = std::min(view.max_reps, remaining / bank[i].duration_minutes);
        if (cap <= 0) continue;
        const int reps = static_cast<int>(rng_.uniform_int(1, cap));
        plan.reps[i] = reps;
        remaining -= reps * bank[i].duration_minutes;
        if (rng_.bernoulli(0.5)) break;
      }
    }

    repair(plan, view, c);
    return plan;
  }

 private:
  void repair(FitnessPlan& plan, const SolverView& view, const VisibleConstraints& c) {
    const ExerciseBank& bank = *view.bank;
    int total = 0;
    for (std::size_t i = 0; i < bank.size(); ++i) {
      if (!usable(bank[i], view, c)) plan.reps[i] = 0;
      plan.reps[i] = std::min(plan.reps[i], view.max_reps);
      total += plan.reps[i] * bank[i].duration_minutes;
    }
    // Shed reps from the most expensive entries until the budget holds.
    while (total > c.time) {
      std::size_t worst = bank.size();
      int worst_cost = -1;
      for (std::size_t i = 0; i < bank.size(); ++i) {
        if (plan.reps[i] > 0 && bank[i].duration_minutes > worst_cost) {
          worst = i;
          worst_cost = bank[i].duration_minutes;
        }
      }
      if (worst == bank.size()) break;
      --plan.reps[worst];
      total -= worst_cost;
    }
  }

  Rng rng_;
  std::optional<FitnessPlan> best_;
  double best_score_ = 0.0;
};

}  // namespace

std::unique_ptr<SolverAgent> make_random_fitness_solver(std::uint64_t seed) {
  return std::make_unique<RandomFitnessSolver>(seed);
}

std::unique_ptr<SolverAgent> make_zero_fitness_solver() {
  return std::make_unique<ZeroFitnessSolver>();
}

std::unique_ptr<SolverAgent> make_oracle_fitness_solver(fitness::UserProfile profile,
                                                        ExerciseBank bank) {
  return std::make_unique<OracleFitnessSolver>(std::move(profile), std::move(bank));
}

std::unique_ptr<SolverAgent> make_hill_climb_fitness_solver(std::uint64_t seed) {
  return std::make_unique<HillClimbFitnessSolver>(seed);
}

std::vector<std::size_t> random_ranking(std::size_t n_candidates, Rng& rng) {
  std::vector<std::size_t> order(n_candidates);
  for (std::size_t i = 0; i < n_candidates; ++i) order[i] = i;
  rng.shuffle(order);
  return order;
}

std::vector<std::size_t> oracle_ranking(const eval::RankingTask& task) {
  return eval::rank_by_scores(task.oracle_scores, task.orientation);
}

course::AssignmentPlan random_course_assignment(const course::CourseInstance& instance,
                                                Rng& rng) {
  course::AssignmentPlan plan;
  for (const auto& sec : instance.sections) {
    const auto r = static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(instance.classrooms.size()) - 1));
    plan.assignments[{sec.course_id, sec.section_id}] = instance.classrooms[r].room_id;
  }
  return plan;
}

}  // namespace planbench::agents
