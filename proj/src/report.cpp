#include "didp/report.hpp"

#include <json.hpp>

#include <sstream>

namespace didp {

namespace {

nlohmann::json number_json(const Number& n) {
  if (n.is_integer()) return n.as_int64();
  if (n.is_rational()) return n.str();  // exact "p/q"
  return n.as_double();
}

}  // namespace

std::string format_human(const Model& model, const Solution& solution) {
  std::ostringstream out;
  out << "status: " << to_string(solution.status) << "\n";
  if (!solution.message.empty()) out << "reason: " << solution.message << "\n";
  if (solution.cost) out << "cost: " << solution.cost->str() << "\n";
  if (!solution.transition_ids.empty() || solution.status == SolveStatus::optimal) {
    out << "transitions:";
    for (const auto& name : transition_names(model, solution.transition_ids)) {
      out << "\n  " << name;
    }
    out << "\n";
  }
  if (solution.best_bound) out << "best bound: " << solution.best_bound->str() << "\n";
  out << "expanded: " << solution.stats.expanded << "\n";
  out << "generated: " << solution.stats.generated << "\n";
  out << "peak registry: " << solution.stats.peak_registry << "\n";
  if (solution.stats.blind) out << "note: no dual bound declared, search is blind\n";
  out << "time: " << solution.stats.wall_time_s << "s\n";
  return out.str();
}

std::string format_jsonl(const Model& model, const Solution& solution, double elapsed) {
  nlohmann::json record;
  record["event"] = "result";
  record["status"] = to_string(solution.status);
  if (solution.cost) record["cost"] = number_json(*solution.cost);
  if (solution.best_bound) record["best_bound"] = number_json(*solution.best_bound);
  if (solution.status == SolveStatus::optimal) {
    record["transitions"] = transition_names(model, solution.transition_ids);
  }
  if (!solution.message.empty()) record["reason"] = solution.message;
  record["expanded"] = solution.stats.expanded;
  record["generated"] = solution.stats.generated;
  record["peak_registry"] = solution.stats.peak_registry;
  record["blind"] = solution.stats.blind;
  record["time_s"] = elapsed >= 0 ? elapsed : solution.stats.wall_time_s;
  return record.dump() + "\n";
}

std::string format_human(const OracleResult& result) {
  std::ostringstream out;
  if (result.budget_exceeded) {
    out << "status: BudgetExceeded\n";
  } else if (!result.value) {
    out << "status: Unbounded\n";
  } else {
    out << "status: Done\ncost: " << result.value->str() << "\n";
  }
  out << "states visited: " << result.states_visited << "\n";
  return out.str();
}

std::string format_jsonl(const Model& model, const OracleResult& result) {
  nlohmann::json record;
  record["event"] = "oracle";
  if (result.budget_exceeded) {
    record["status"] = "BudgetExceeded";
  } else if (!result.value) {
    record["status"] = "Unbounded";
  } else {
    record["status"] = "Done";
    record["cost"] = number_json(*result.value);
    record["transitions"] = transition_names(model, result.transition_ids);
  }
  record["states_visited"] = result.states_visited;
  return record.dump() + "\n";
}

}  // namespace didp
