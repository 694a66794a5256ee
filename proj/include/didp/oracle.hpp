#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "didp/model.hpp"

namespace didp {

struct OracleLimits {
  std::uint64_t max_states = 1'000'000;
};

struct OracleOptions {
  const State* root = nullptr;  // defaults to the model's target state
  // When set, receives (state, value) for every finite memoized state.
  std::vector<std::pair<State, Number>>* collect_values = nullptr;
};

// value == nullopt means unbounded: infinity for minimization, -infinity
// for maximization (no applicable transition reaches a base state).
struct OracleResult {
  bool budget_exceeded = false;
  std::optional<Number> value;
  std::vector<int> transition_ids;
  std::uint64_t states_visited = 0;
};

// Exhaustive recursion over the model semantics with full memoization.
// States on the recursion stack evaluate to the unbounded marker, which
// prunes cycles; a value whose computation was cut by an ancestor state is
// context-dependent and is recomputed instead of memoized. Any reduce
// direction and any cost form are supported.
OracleResult oracle_solve(const Model& model, const OracleLimits& limits = {},
                          const OracleOptions& options = {});

struct ValidationResult {
  bool valid = false;
  std::optional<Number> cost;
  int step = -1;        // violating step (size of the sequence checks pass)
  std::string reason;
};

// Replays a transition sequence from the target state: state constraints at
// every state including the start, preconditions and the forced-transition
// rule at every step, base state exactly at the end. The cost is recomputed
// by folding the cost expressions backward from the base state.
ValidationResult validate_solution(const Model& model, const std::vector<int>& transition_ids);
ValidationResult validate_solution_named(const Model& model,
                                         const std::vector<std::string>& names);

}  // namespace didp
