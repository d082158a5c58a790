#include "planbench/eval/tasks.hpp"

#include "planbench/eval/metrics.hpp"

namespace planbench::eval {

RankingResult grade_ranking(const std::vector<std::size_t>& agent_order,
                            const std::vector<std::size_t>& oracle_order,
                            bool malformed) {
  RankingResult result;
  result.agent_order = agent_order;
  result.oracle_order = oracle_order;
  result.malformed = malformed;
  const std::size_t n = oracle_order.size();
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    result.hit_at[k] = malformed ? false : hit_at_k(agent_order, oracle_order, k);
  }
  result.pairwise = pairwise_agreement(agent_order, oracle_order);
  return result;
}

}  // namespace planbench::eval
