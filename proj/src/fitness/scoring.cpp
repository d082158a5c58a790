#include "planbench/fitness/scoring.hpp"

#include <cmath>

#include "planbench/fitness/oracle.hpp"

namespace planbench::fitness {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* where) {
  if (a != b)
    throw MismatchedDimensions(std::string(where) + ": lengths " +
                               std::to_string(a) + " vs " + std::to_string(b));
}

double norm(const std::vector<int>& v) {
  double s = 0.0;
  for (int x : v) s += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(s);
}

}  // namespace

double plan_score(const FitnessPlan& plan, const std::vector<double>& preferences) {
  require_same_length(plan.reps.size(), preferences.size(), "plan_score");
  double sum = 0.0;
  int selected = 0;
  for (std::size_t i = 0; i < plan.reps.size(); ++i) {
    if (plan.reps[i] != 0) {
      sum += preferences[i];
      ++selected;
    }
  }
  if (selected == 0) return 0.0;
  return sum / selected / 10.0;
}

double rep_score(const FitnessPlan& plan, const FitnessPlan& desired) {
  require_same_length(plan.reps.size(), desired.reps.size(), "rep_score");
  const double np = norm(plan.reps);
  const double nd = norm(desired.reps);
  if (np == 0.0 || nd == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < plan.reps.size(); ++i)
    dot += static_cast<double>(plan.reps[i]) * static_cast<double>(desired.reps[i]);
  const double cosine = dot / (np * nd);
  const double ratio = std::min(1.0, std::min(np / nd, nd / np));
  return cosine * ratio;
}

double overlap_score(const std::vector<FitnessPlan>& history_window,
                     bool positive_range) {
  if (history_window.empty()) throw EmptyWindow("overlap_score: empty window");
  const std::size_t n = history_window.front().reps.size();
  for (const auto& p : history_window)
    require_same_length(p.reps.size(), n, "overlap_score");
  if (n == 0) return 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : history_window) {
      if (p.reps[i] != 0) {
        ++used;
        break;
      }
    }
  }
  const double fraction = static_cast<double>(used) / static_cast<double>(n);
  return positive_range ? 1.0 - fraction : -fraction;
}

double feedback_score(const FitnessPlan& plan, const EpisodeState& state,
                      const UserProfile& profile, const ExerciseBank& bank,
                      const EpisodeConfig& config) {
  config.validate();
  const FitnessPlan desired = desired_plan(profile, bank, state.active_emergencies);

  std::vector<FitnessPlan> window;
  const std::size_t from_history =
      std::min<std::size_t>(state.plan_history.size(),
                            static_cast<std::size_t>(config.overlap_window) - 1);
  for (std::size_t i = state.plan_history.size() - from_history;
       i < state.plan_history.size(); ++i)
    window.push_back(state.plan_history[i]);
  window.push_back(plan);

  const double p = plan_score(plan, profile.preferences);
  const double r = rep_score(plan, desired);
  const double o = overlap_score(window, config.overlap_positive);
  return 10.0 * (config.alpha * p + config.beta * r + (1.0 - config.alpha - config.beta) * o);
}

}  // namespace planbench::fitness
