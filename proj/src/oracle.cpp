#include "didp/oracle.hpp"

#include <limits>
#include <unordered_map>

#include "didp/errors.hpp"

namespace didp {

namespace {

constexpr int kNoPrune = std::numeric_limits<int>::max();

struct Memo {
  std::optional<Number> value;
};

class OracleEngine {
 public:
  OracleEngine(const Model& model, std::uint64_t max_states)
      : model_(model), max_states_(max_states) {}

  // Returns the value of `state` in the current stack context together with
  // the shallowest stack depth this subtree was pruned at (kNoPrune if the
  // value is context-free and safe to memoize).
  std::pair<std::optional<Number>, int> visit(const State& state, int depth) {
    if (budget_exceeded) return {std::nullopt, kNoPrune};
    if (!check_constraints(model_, state)) return {std::nullopt, kNoPrune};
    if (is_base(model_, state)) return {Number(0), kNoPrune};

    if (auto it = memo_.find(state); it != memo_.end()) {
      return {it->second.value, kNoPrune};
    }
    if (auto it = on_stack_.find(state); it != on_stack_.end()) {
      return {std::nullopt, it->second};
    }
    if (++states_visited > max_states_) {
      budget_exceeded = true;
      return {std::nullopt, kNoPrune};
    }

    on_stack_.emplace(state, depth);
    std::optional<Number> best;
    int min_prune = kNoPrune;
    for (int t_id : applicable_transitions(model_, state)) {
      const Transition& t = model_.transitions[t_id];
      State successor = apply(model_, t, state);
      auto [value, prune] = visit(successor, depth + 1);
      min_prune = std::min(min_prune, prune);
      if (budget_exceeded) break;
      if (!value) continue;  // unbounded successors contribute nothing
      Number candidate = transition_cost(t, state, *value);
      if (!best) {
        best = candidate;
      } else {
        best = model_.reduce == Reduce::min ? Number::min(*best, candidate)
                                            : Number::max(*best, candidate);
      }
    }
    on_stack_.erase(state);

    // A prune at this state's own depth closes a cycle through this state
    // and is resolved here; a shallower prune makes the value depend on the
    // ancestors currently on the stack, so it must not be cached.
    if (!budget_exceeded && min_prune >= depth) {
      memo_.emplace(state, Memo{best});
      return {best, kNoPrune};
    }
    return {best, min_prune};
  }

  Number transition_cost(const Transition& t, const State& state, const Number& successor_value) {
    EvalContext ctx{state, model_.tables};
    ctx.cost_value = &successor_value;
    return eval_numeric(*t.cost, ctx);
  }

  // Greedy reconstruction: from each state take the first transition whose
  // cost expression reproduces the state's value.
  std::vector<int> reconstruct(const State& root, const Number& root_value) {
    std::vector<int> path;
    State state = root;
    Number value = root_value;
    std::size_t guard = memo_.size() + 2;
    while (!is_base(model_, state)) {
      if (path.size() > guard) {
        throw DidpError("oracle reconstruction did not reach a base state");
      }
      bool advanced = false;
      for (int t_id : applicable_transitions(model_, state)) {
        const Transition& t = model_.transitions[t_id];
        State successor = apply(model_, t, state);
        auto [succ_value, prune] = visit(successor, 0);
        (void)prune;
        if (!succ_value) continue;
        if (transition_cost(t, state, *succ_value) == value) {
          path.push_back(t_id);
          state = std::move(successor);
          value = *succ_value;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        throw DidpError("oracle reconstruction found no transition matching the value");
      }
    }
    return path;
  }

  const Model& model_;
  std::uint64_t max_states_;
  std::uint64_t states_visited = 0;
  bool budget_exceeded = false;
  std::unordered_map<State, Memo, StateHash> memo_;
  std::unordered_map<State, int, StateHash> on_stack_;
};

}  // namespace

OracleResult oracle_solve(const Model& model, const OracleLimits& limits,
                          const OracleOptions& options) {
  OracleEngine engine(model, limits.max_states);
  const State& root = options.root != nullptr ? *options.root : model.target;
  auto [value, prune] = engine.visit(root, 0);
  (void)prune;

  OracleResult result;
  result.states_visited = engine.states_visited;
  if (engine.budget_exceeded) {
    result.budget_exceeded = true;
    return result;
  }
  result.value = value;
  if (value) {
    result.transition_ids = engine.reconstruct(root, *value);
  }
  if (options.collect_values != nullptr) {
    for (const auto& [state, memo] : engine.memo_) {
      if (memo.value) options.collect_values->emplace_back(state, *memo.value);
    }
  }
  return result;
}

ValidationResult validate_solution(const Model& model, const std::vector<int>& transition_ids) {
  ValidationResult out;
  std::vector<State> states;
  states.push_back(model.target);

  for (std::size_t k = 0; k <= transition_ids.size(); ++k) {
    const State& state = states.back();
    if (!check_constraints(model, state)) {
      out.step = static_cast<int>(k);
      out.reason = "state constraint violated";
      return out;
    }
    bool base = is_base(model, state);
    if (k == transition_ids.size()) {
      if (!base) {
        out.step = static_cast<int>(k);
        out.reason = "not a base state";
        return out;
      }
      break;
    }
    if (base) {
      out.step = static_cast<int>(k);
      out.reason = "base state reached before the end of the sequence";
      return out;
    }
    int t_id = transition_ids[k];
    if (t_id < 0 || t_id >= static_cast<int>(model.transitions.size())) {
      out.step = static_cast<int>(k);
      out.reason = "unknown transition";
      return out;
    }
    std::vector<int> applicable = applicable_transitions(model, state);
    bool found = false;
    for (int a : applicable) {
      if (a == t_id) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.step = static_cast<int>(k);
      const Transition& t = model.transitions[t_id];
      out.reason = transition_applicable(model, t, state)
                       ? "a forced transition suppresses '" + t.name + "'"
                       : "precondition of '" + t.name + "' violated";
      return out;
    }
    states.push_back(apply(model, model.transitions[t_id], state));
  }

  // Fold the cost expressions backward from the base state.
  Number value(0);
  for (std::size_t k = transition_ids.size(); k-- > 0;) {
    const Transition& t = model.transitions[transition_ids[k]];
    EvalContext ctx{states[k], model.tables};
    ctx.cost_value = &value;
    value = eval_numeric(*t.cost, ctx);
  }
  out.valid = true;
  out.cost = value;
  return out;
}

ValidationResult validate_solution_named(const Model& model,
                                         const std::vector<std::string>& names) {
  std::vector<int> ids;
  ids.reserve(names.size());
  for (const auto& name : names) {
    int found = -1;
    for (std::size_t k = 0; k < model.transitions.size(); ++k) {
      if (model.transitions[k].name == name) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found < 0) {
      ValidationResult out;
      out.step = static_cast<int>(ids.size());
      out.reason = "unknown transition '" + name + "'";
      return out;
    }
    ids.push_back(found);
  }
  return validate_solution(model, ids);
}

}  // namespace didp
