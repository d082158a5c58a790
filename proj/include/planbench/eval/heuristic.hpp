#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace planbench::eval {

enum class Orientation { HigherBetter, LowerBetter };

// Ground-truth-aware scorer f(candidate, gold, problem) -> real. Implementors
// must accept any well-formed candidate for their task; refusal is a bug.
// The orientation flag says which direction of the raw score is better, so
// callers can rank without knowing the task.
template <typename Candidate, typename Gold, typename Problem>
class OracleHeuristic {
 public:
  virtual ~OracleHeuristic() = default;
  virtual Orientation orientation() const = 0;
  virtual double score(const Candidate& candidate, const Gold& gold,
                       const Problem& problem) const = 0;
};

// Maps a raw score to "higher is better" space.
inline double oriented(double raw, Orientation o) {
  return o == Orientation::HigherBetter ? raw : -raw;
}

// Pair-ordering function: 0 if the first candidate is at least as good as the
// second (ties favor the first argument), 1 otherwise.
inline int compare_scores(double first, double second, Orientation o) {
  return oriented(first, o) >= oriented(second, o) ? 0 : 1;
}

template <typename C, typename G, typename P>
int compare(const OracleHeuristic<C, G, P>& f, const C& y1, const C& y2,
            const G& gold, const P& problem) {
  return compare_scores(f.score(y1, gold, problem), f.score(y2, gold, problem),
                        f.orientation());
}

// Stable sort of candidate indices, best first; ties preserve input order,
// consistent with compare_scores' tie rule.
inline std::vector<std::size_t> rank_by_scores(const std::vector<double>& scores,
                                               Orientation o) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return oriented(scores[a], o) > oriented(scores[b], o);
  });
  return order;
}

template <typename C, typename G, typename P>
std::vector<std::size_t> oracle_rank(const OracleHeuristic<C, G, P>& f,
                                     const std::vector<C>& candidates,
                                     const G& gold, const P& problem) {
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const auto& c : candidates) scores.push_back(f.score(c, gold, problem));
  return rank_by_scores(scores, f.orientation());
}

}  // namespace planbench::eval
