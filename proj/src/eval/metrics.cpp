#include "planbench/eval/metrics.hpp"

#include <algorithm>
#include <unordered_map>

namespace planbench::eval {

bool hit_at_k(const std::vector<std::size_t>& agent_order,
              const std::vector<std::size_t>& oracle_order, std::size_t k) {
  if (oracle_order.empty()) throw EmptySet("hit_at_k: empty oracle order");
  if (k < 1 || k > oracle_order.size())
    throw BadK("hit_at_k: k=" + std::to_string(k) + " out of range [1, " +
               std::to_string(oracle_order.size()) + "]");
  const std::size_t best = oracle_order.front();
  const std::size_t limit = std::min(k, agent_order.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (agent_order[i] == best) return true;
  }
  return false;
}

double pairwise_agreement(const std::vector<std::size_t>& agent_order,
                          const std::vector<std::size_t>& oracle_order) {
  std::unordered_map<std::size_t, std::size_t> agent_pos;
  for (std::size_t i = 0; i < agent_order.size(); ++i) agent_pos[agent_order[i]] = i;

  std::size_t comparable = 0;
  std::size_t agreeing = 0;
  for (std::size_t i = 0; i < oracle_order.size(); ++i) {
    for (std::size_t j = i + 1; j < oracle_order.size(); ++j) {
      const auto a = agent_pos.find(oracle_order[i]);
      const auto b = agent_pos.find(oracle_order[j]);
      if (a == agent_pos.end() || b == agent_pos.end()) continue;
      ++comparable;
      // Oracle says i-th listed candidate outranks j-th.
      if (a->second < b->second) ++agreeing;
    }
  }
  if (comparable == 0) return 0.0;
  return static_cast<double>(agreeing) / static_cast<double>(comparable);
}

double pass_rate(const std::vector<bool>& records) {
  if (records.empty()) throw EmptySet("pass_rate: empty record set");
  std::size_t passed = 0;
  for (bool b : records) passed += b ? 1 : 0;
  return static_cast<double>(passed) / static_cast<double>(records.size());
}

}  // namespace planbench::eval
