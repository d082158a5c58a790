#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "planbench/harness/records.hpp"

namespace planbench::harness {

// Aggregates records into one row per (environment, condition, agent, mode)
// group with the role's metric columns. All records must share a role; every
// number is recomputed from the rows alone. Column names state the computed
// definition (e.g. optimality for course solvers is the threshold pass rate
// among feasible plans).
nlohmann::json report_json(const std::vector<EvalRecord>& records);

// Fixed-width text table of the same aggregation.
std::string report_text(const std::vector<EvalRecord>& records);

}  // namespace planbench::harness
