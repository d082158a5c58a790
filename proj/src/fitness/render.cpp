#include "planbench/fitness/render.hpp"

#include <cstdio>
#include <sstream>

namespace planbench::fitness {

namespace {

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

std::string render_bank(const ExerciseBank& bank) {
  std::ostringstream out;
  out << "Available exercises (one rep = one unit of the listed duration):\n";
  for (const auto& ex : bank) {
    out << "- " << ex.name << ": " << ex.duration_minutes << " min/rep, intensity "
        << to_string(ex.intensity) << ", gym " << (ex.gym_required ? "required" : "not required")
        << ", " << to_string(ex.category) << ", muscles: " << join(ex.muscle_groups) << "\n";
  }
  return out.str();
}

std::string render_constraints(const UserProfile& profile) {
  std::ostringstream out;
  out << "Constraints:\n"
      << "- available time: " << profile.available_time_minutes << " minutes\n"
      << "- gym access: " << (profile.gym_access ? "yes" : "no") << "\n"
      << "- stamina: " << to_string(profile.stamina) << "\n"
      << "- maximum reps per exercise: " << profile.max_reps << "\n";
  if (!profile.excluded_muscle_groups.empty())
    out << "- muscle groups to avoid: " << join(profile.excluded_muscle_groups) << "\n";
  return out.str();
}

std::string render_preferences(const UserProfile& profile, const ExerciseBank& bank) {
  std::ostringstream out;
  out << "User preference scores (0-10):\n";
  for (std::size_t i = 0; i < bank.size(); ++i)
    out << "- " << bank[i].name << ": " << format_score(profile.preferences[i]) << "\n";
  return out.str();
}

std::string render_plan(const FitnessPlan& plan, const ExerciseBank& bank) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < bank.size(); ++i) {
    if (plan.reps[i] == 0) continue;
    if (!first) out += ", ";
    out += "\"" + bank[i].name + "\": " + std::to_string(plan.reps[i]);
    first = false;
  }
  out += "}";
  return out;
}

std::string render_emergency(const EmergencyCondition& emergency) {
  std::string out = "New condition: " + emergency.description + " (";
  if (const auto* mg = std::get_if<ExcludeMuscleGroup>(&emergency.effect)) {
    out += "avoid the " + mg->group + " muscle group from now on";
  } else if (const auto* rt = std::get_if<ReduceAvailableTime>(&emergency.effect)) {
    out += "available time drops by " + std::to_string(rt->delta_minutes) + " minutes from now on";
  } else if (const auto* ex = std::get_if<ExcludeExercise>(&emergency.effect)) {
    out += "drop " + ex->name + " from now on";
  }
  out += ")";
  return out;
}

std::string render_history(const EpisodeState& state, const ExerciseBank& bank) {
  // Plans are labeled P_0..P_{t-1} with F_j directly under P_j; a question
  // about the next plan (P_t) therefore sees F_0..F_{t-1} but never its own
  // feedback.
  std::ostringstream out;
  for (std::size_t i = 0; i < state.plan_history.size(); ++i) {
    out << "P_" << i << ": " << render_plan(state.plan_history[i], bank) << "\n";
    const Feedback& fb = state.feedback_history[i];
    out << "F_" << i << ": ";
    if (fb.feasible) {
      out << "satisfaction " << format_score(fb.satisfaction) << " out of 10";
    } else {
      out << "this plan is inadmissible";
      for (const auto& v : fb.violations) out << "; " << v;
    }
    if (fb.emergency) out << ". " << render_emergency(*fb.emergency);
    out << "\n";
  }
  return out.str();
}

}  // namespace planbench::fitness
