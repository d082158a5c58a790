#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace planbench::agents {

enum class AnswerKind { FitnessPlan, CourseAssignment, Verdict, Ranking };

// Structured value recovered from free-form agent text. At most one payload
// field is populated; empty payload means parse_errors says why.
struct ParsedAnswer {
  std::optional<std::map<std::string, int>> fitness_plan;  // exercise -> reps
  std::optional<std::map<std::string, std::string>> course_assignment;
  // "Course X Section Y" -> room
  std::optional<bool> verdict_feasible;
  std::optional<bool> verdict_optimal;  // only course verifiers produce this
  std::optional<std::vector<std::string>> ranking_labels;
  std::vector<std::string> parse_errors;

  bool ok() const { return parse_errors.empty(); }
};

// Extracts the last fenced code block if any, then falls back to
// role-specific patterns (inline JSON, "Final answer: B > A > D > C",
// yes/no verdict tokens). Never throws on garbage; failures land in
// parse_errors.
ParsedAnswer parse_answer(AnswerKind kind, const std::string& raw_text);

}  // namespace planbench::agents
