#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planbench/eval/heuristic.hpp"

namespace planbench::eval {

// A rendered N-way ranking problem. oracle_scores are never shown to agents;
// they exist so graders can recompute the reference ordering.
struct RankingTask {
  std::string problem_text;
  std::vector<std::string> candidate_texts;
  std::optional<std::string> context_text;  // few-shot / one-shot material
  std::vector<double> oracle_scores;        // hidden from agents
  Orientation orientation = Orientation::HigherBetter;
};

// A rendered yes/no admissibility problem.
struct VerifierTask {
  std::string problem_text;
  std::string candidate_text;
  std::optional<std::string> context_text;
};

// Graded outcome of one ranking instance.
struct RankingResult {
  std::vector<std::size_t> agent_order;   // may be partial if malformed
  std::vector<std::size_t> oracle_order;
  std::map<std::size_t, bool> hit_at;     // k -> hit@k
  double pairwise = 0.0;
  bool malformed = false;
};

// Grades an agent ordering against the oracle ordering. hit@k is computed
// for every k in 1..n-1 (hit@n is vacuously true); malformed or partial
// orders grade as misses per the malformed flag.
RankingResult grade_ranking(const std::vector<std::size_t>& agent_order,
                            const std::vector<std::size_t>& oracle_order,
                            bool malformed);

}  // namespace planbench::eval
