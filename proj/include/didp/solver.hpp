#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "didp/model.hpp"

namespace didp {

enum class CombineOp { plus, max };

// The two cost algebras accepted by the solver: (+, 0, <=) and (max, 0, <=)
// over the nonnegative numbers. Both are monoids with identity 0 and an
// isotone combine, which is what makes best-first search exact.
struct CostAlgebra {
  CombineOp op = CombineOp::plus;

  Number identity() const { return Number(0); }

  Number combine(const Number& a, const Number& b) const {
    return op == CombineOp::plus ? a + b : Number::max(a, b);
  }
};

// Outcome of the syntactic cost-form check: every transition cost must be
// (+ e cost) / (+ cost e) or uniformly (max e cost) / (max cost e), with e
// free of the cost placeholder, and the model must minimize.
struct CostFormInfo {
  std::optional<CostAlgebra> algebra;
  std::string reason;                    // set when unsupported
  std::vector<NumericPtr> edge_weights;  // e per transition, definition order

  bool supported() const { return algebra.has_value(); }
};

CostFormInfo classify_cost_form(const Model& model);

enum class SolveStatus { optimal, infeasible, time_limit, memory_limit, unsupported_cost_form };

const char* to_string(SolveStatus status);

struct SolveLimits {
  double time_seconds = 1800.0;
  std::uint64_t max_generated_states = 10'000'000;
};

struct SolveOptions {
  bool use_dominance = true;
  // Called for each strict dominance event detected during duplicate
  // detection (dominating state first).
  std::function<void(const State& dominating, const State& dominated)> dominance_observer;
};

struct SolveStats {
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  std::uint64_t peak_registry = 0;
  std::uint64_t stale_skipped = 0;
  double wall_time_s = 0.0;
  bool blind = false;  // no dual bound declared; h is the identity
};

struct Solution {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<Number> cost;
  std::vector<int> transition_ids;
  std::optional<Number> best_bound;
  std::string message;  // reason for unsupported_cost_form
  SolveStats stats;
};

// Cost-algebraic best-first search: pops the minimum (f, h) node with LIFO
// tie-breaking, prunes states violating a state constraint, and inserts a
// successor only if no registered state dominates it with an equal or
// smaller g-value. Optimal solutions report cost and the transition
// sequence; truncated runs report the best lower bound seen on the open
// list.
Solution solve(const Model& model, const SolveLimits& limits = {},
               const SolveOptions& options = {});

std::vector<std::string> transition_names(const Model& model, const std::vector<int>& ids);

}  // namespace didp
