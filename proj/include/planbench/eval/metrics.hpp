#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace planbench::eval {

struct BadK : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EmptySet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// True iff the oracle-best candidate (oracle_order[0]) appears among the
// first k entries of agent_order. agent_order may be partial (malformed
// answers); missing candidates simply cannot produce a hit.
bool hit_at_k(const std::vector<std::size_t>& agent_order,
              const std::vector<std::size_t>& oracle_order, std::size_t k);

// Fraction of unordered candidate pairs whose relative order agrees between
// the two permutations. Pairs where either element is absent from
// agent_order are skipped; if no pair is comparable the result is 0.
double pairwise_agreement(const std::vector<std::size_t>& agent_order,
                          const std::vector<std::size_t>& oracle_order);

// Mean of graded booleans.
double pass_rate(const std::vector<bool>& records);

}  // namespace planbench::eval
