#include "planbench/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace planbench::harness {

namespace {

using nlohmann::json;

struct GroupKey {
  std::string environment, condition, agent, mode;
  auto operator<=>(const GroupKey&) const = default;
};

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

json solver_metrics(const std::vector<const EvalRecord*>& rows) {
  const bool course = rows.front()->environment == "course";
  json metrics;
  if (course) {
    std::vector<double> complete, feasible_given_complete, optimal_given_feasible,
        delivered;
    for (const auto* r : rows) {
      const bool c = r->outcome.value("complete", false);
      const bool f = r->outcome.value("feasible", false);
      const bool o = r->outcome.value("optimal", false);
      delivered.push_back(r->outcome.value("delivered", false) ? 1.0 : 0.0);
      complete.push_back(c ? 1.0 : 0.0);
      if (c) feasible_given_complete.push_back(f ? 1.0 : 0.0);
      if (f) optimal_given_feasible.push_back(o ? 1.0 : 0.0);
    }
    metrics["completeness"] = mean(complete);
    metrics["feasibility_given_complete"] = mean(feasible_given_complete);
    metrics["optimality_given_feasible"] = mean(optimal_given_feasible);
    metrics["delivery_rate"] = mean(delivered);
  } else {
    std::vector<double> feasibility, optimality, diversity, cost;
    for (const auto* r : rows) {
      feasibility.push_back(r->outcome.value("feasibility", 0.0));
      optimality.push_back(r->outcome.value("optimality", 0.0));
      diversity.push_back(r->outcome.value("diversity", 0.0));
      cost.push_back(static_cast<double>(r->outcome.value("cost_utility", 0)));
    }
    metrics["feasibility"] = mean(feasibility);
    metrics["optimality"] = mean(optimality);
    metrics["diversity"] = mean(diversity);
    metrics["cost_utility"] = mean(cost);
    metrics["pass_rate"] = mean(feasibility);  // feasibility doubles as the pass rate
  }
  return metrics;
}

json verifier_metrics(const std::vector<const EvalRecord*>& rows) {
  const bool course = rows.front()->environment == "course";
  json metrics;
  if (course) {
    std::vector<double> feas_acc, opt_acc_on_feasible, both;
    for (const auto* r : rows) {
      feas_acc.push_back(r->outcome.value("correct_feasible", false) ? 1.0 : 0.0);
      if (r->outcome.value("truth_feasible", false))
        opt_acc_on_feasible.push_back(r->outcome.value("correct_optimal", false) ? 1.0
                                                                                 : 0.0);
      both.push_back(r->outcome.value("correct_both", false) ? 1.0 : 0.0);
    }
    metrics["feasibility_accuracy"] = mean(feas_acc);
    metrics["optimality_accuracy_on_feasible"] = mean(opt_acc_on_feasible);
    metrics["pass_rate"] = mean(both);
  } else {
    std::vector<double> correct;
    for (const auto* r : rows)
      correct.push_back(r->outcome.value("correct", false) ? 1.0 : 0.0);
    metrics["pass_rate"] = mean(correct);
  }
  return metrics;
}

json heuristic_metrics(const std::vector<const EvalRecord*>& rows) {
  json metrics;
  for (int k = 1; k <= 3; ++k) {
    std::vector<double> hits;
    for (const auto* r : rows) {
      const auto& hit_at = r->outcome["hit_at"];
      const std::string key = std::to_string(k);
      if (hit_at.contains(key)) hits.push_back(hit_at[key].get<bool>() ? 1.0 : 0.0);
    }
    if (!hits.empty()) metrics["hit@" + std::to_string(k)] = mean(hits);
  }
  std::vector<double> pairwise, malformed;
  for (const auto* r : rows) {
    pairwise.push_back(r->outcome.value("pairwise_agreement", 0.0));
    malformed.push_back(r->outcome.value("malformed", false) ? 1.0 : 0.0);
  }
  metrics["comparison_accuracy"] = mean(pairwise);
  metrics["malformed_rate"] = mean(malformed);
  return metrics;
}

}  // namespace

json report_json(const std::vector<EvalRecord>& records) {
  if (records.empty()) throw EmptyInput("report: no records");
  const std::string role = records.front().role;
  for (const auto& r : records) {
    if (r.role != role)
      throw MixedRoles("report: records mix roles '" + role + "' and '" + r.role + "'");
  }

  std::map<GroupKey, std::vector<const EvalRecord*>> groups;
  for (const auto& r : records)
    groups[{r.environment, r.condition, r.agent, r.mode}].push_back(&r);

  json out;
  out["role"] = role;
  out["groups"] = json::array();
  for (const auto& [key, rows] : groups) {
    json group;
    group["environment"] = key.environment;
    group["condition"] = key.condition;
    group["agent"] = key.agent;
    group["mode"] = key.mode;
    group["count"] = rows.size();
    if (role == "solver") {
      group["metrics"] = solver_metrics(rows);
    } else if (role == "verifier") {
      group["metrics"] = verifier_metrics(rows);
    } else {
      group["metrics"] = heuristic_metrics(rows);
    }
    out["groups"].push_back(std::move(group));
  }
  return out;
}

std::string report_text(const std::vector<EvalRecord>& records) {
  const json report = report_json(records);

  // Column set = union over groups, in first-seen order.
  std::vector<std::string> metric_names;
  for (const auto& group : report["groups"]) {
    for (const auto& [name, value] : group["metrics"].items()) {
      (void)value;
      if (std::find(metric_names.begin(), metric_names.end(), name) == metric_names.end())
        metric_names.push_back(name);
    }
  }

  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header = {"environment", "condition", "agent", "mode", "n"};
  header.insert(header.end(), metric_names.begin(), metric_names.end());
  table.push_back(header);

  for (const auto& group : report["groups"]) {
    std::vector<std::string> row = {group["environment"].get<std::string>(),
                                    group["condition"].get<std::string>(),
                                    group["agent"].get<std::string>(),
                                    group["mode"].get<std::string>(),
                                    std::to_string(group["count"].get<std::size_t>())};
    for (const auto& name : metric_names) {
      if (group["metrics"].contains(name)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", group["metrics"][name].get<double>());
        row.push_back(buf);
      } else {
        row.push_back("-");
      }
    }
    table.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& row : table)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream out;
  out << "role: " << report["role"].get<std::string>() << "\n";
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (std::size_t c = 0; c < table[r].size(); ++c) {
      if (c > 0) out << "  ";
      out << table[r][c];
      for (std::size_t pad = table[r][c].size(); pad < widths[c]; ++pad) out << ' ';
    }
    out << "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < widths.size(); ++c) total += widths[c] + (c > 0 ? 2 : 0);
      out << std::string(total, '-') << "\n";
    }
  }
  return out.str();
}

}  // namespace planbench::harness
