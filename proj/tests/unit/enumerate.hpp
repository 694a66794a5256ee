#pragma once

// Second, deliberately naive ground truth: enumerate every transition path
// from a state without memoization. Used to cross-check the oracle on tiny
// instances. Depth-capped so models with self-loops terminate; with
// nonnegative isotone costs a loop never improves a path, so any cap at
// least as long as an optimal path preserves the optimum.

#include <cstdint>
#include <optional>

#include "didp/model.hpp"

namespace testing {

struct EnumerationBudget {
  std::uint64_t paths = 100000;
  int depth = 64;
  bool exhausted = false;
};

inline std::optional<didp::Number> enumerate_paths(const didp::Model& model,
                                                   const didp::State& state,
                                                   EnumerationBudget& budget, int depth = 0) {
  using didp::Number;
  if (budget.exhausted) return std::nullopt;
  if (!check_constraints(model, state)) return std::nullopt;
  if (is_base(model, state)) return Number(0);
  if (depth >= budget.depth) return std::nullopt;
  std::optional<Number> best;
  for (int t_id : applicable_transitions(model, state)) {
    const didp::Transition& t = model.transitions[t_id];
    if (budget.paths == 0) {
      budget.exhausted = true;
      return std::nullopt;
    }
    --budget.paths;
    didp::State successor = apply(model, t, state);
    std::optional<Number> value = enumerate_paths(model, successor, budget, depth + 1);
    if (!value) continue;
    didp::EvalContext ctx{state, model.tables};
    ctx.cost_value = &*value;
    Number candidate = eval_numeric(*t.cost, ctx);
    if (!best) {
      best = candidate;
    } else {
      best = model.reduce == didp::Reduce::min ? Number::min(*best, candidate)
                                               : Number::max(*best, candidate);
    }
  }
  return best;
}

}  // namespace testing
