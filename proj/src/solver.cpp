#include "didp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

#include "didp/errors.hpp"
#include "didp/printer.hpp"

namespace didp {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "Optimal";
    case SolveStatus::infeasible: return "Infeasible";
    case SolveStatus::time_limit: return "TimeLimit";
    case SolveStatus::memory_limit: return "MemoryLimit";
    case SolveStatus::unsupported_cost_form: return "UnsupportedCostForm";
  }
  return "?";
}

CostFormInfo classify_cost_form(const Model& model) {
  CostFormInfo info;
  if (model.reduce == Reduce::max) {
    info.reason = "maximization models are not supported by this solver";
    return info;
  }
  std::optional<CombineOp> op;
  std::vector<NumericPtr> weights;
  for (const auto& t : model.transitions) {
    if (!t.cost) {
      info.reason = "transition '" + t.name + "' has no cost expression";
      return info;
    }
    const auto* binary = std::get_if<NumericExpr::Binary>(&t.cost->node);
    if (binary == nullptr ||
        (binary->op != NumericBinaryOp::add && binary->op != NumericBinaryOp::max)) {
      info.reason = "cost of transition '" + t.name +
                    "' is not of the form (+ e cost) or (max e cost)";
      return info;
    }
    bool lhs_cost = std::holds_alternative<NumericExpr::CostPlaceholder>(binary->lhs->node);
    bool rhs_cost = std::holds_alternative<NumericExpr::CostPlaceholder>(binary->rhs->node);
    if (lhs_cost == rhs_cost) {
      info.reason = "cost of transition '" + t.name +
                    "' must combine the cost placeholder with one weight expression";
      return info;
    }
    NumericPtr weight = lhs_cost ? binary->rhs : binary->lhs;
    if (contains_cost_placeholder(*weight)) {
      info.reason = "edge weight of transition '" + t.name + "' contains the cost placeholder";
      return info;
    }
    CombineOp this_op = binary->op == NumericBinaryOp::add ? CombineOp::plus : CombineOp::max;
    if (op && *op != this_op) {
      info.reason = "model mixes additive and max cost expressions";
      return info;
    }
    op = this_op;
    weights.push_back(weight);
  }
  info.algebra = CostAlgebra{op.value_or(CombineOp::plus)};
  info.edge_weights = std::move(weights);
  return info;
}

namespace {

struct SearchNode {
  State state;
  Number g;
  Number h;
  Number f;
  int parent = -1;
  int via_transition = -1;
  bool stale = false;
};

struct HeapEntry {
  Number f;
  Number h;
  std::uint64_t seq = 0;
  int node = -1;
};

// Min (f, h), then LIFO on insertion order; std::push_heap keeps the
// maximum on top, so the comparator is reversed.
struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    int cf = compare(a.f, b.f);
    if (cf != 0) return cf > 0;
    int ch = compare(a.h, b.h);
    if (ch != 0) return ch > 0;
    return a.seq < b.seq;
  }
};

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 0x811c9dc5;
    for (auto w : v) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

struct RegistryEntry {
  int node = -1;
  Number g;
};

// Dominance-aware duplicate store. Keys exclude resource variables; each
// bucket holds the undominated frontier of (resource values, g) pairs.
class StateRegistry {
 public:
  StateRegistry(const Model& model, bool use_dominance)
      : model_(model), use_dominance_(use_dominance) {
    g_epsilon_ = model.cost_type == CostType::continuous ? 1e-9 : 0.0;
  }

  std::vector<std::uint64_t> signature(const State& s) const {
    std::vector<std::uint64_t> key;
    for (const auto& decl : model_.variables) {
      bool in_signature = !(use_dominance_ && decl.is_resource());
      if (!in_signature) continue;
      switch (decl.kind) {
        case VarKind::set:
          for (auto w : s.sets[decl.index].words()) key.push_back(w);
          break;
        case VarKind::element:
          key.push_back(static_cast<std::uint64_t>(s.elements[decl.index]));
          break;
        case VarKind::numeric: {
          auto [a, b] = s.numerics[decl.index].key();
          key.push_back(a);
          key.push_back(b);
          break;
        }
      }
    }
    return key;
  }

  bool g_leq(const Number& a, const Number& b) const {
    if (g_epsilon_ == 0.0) return a <= b;
    return a.as_double() <= b.as_double() + g_epsilon_;
  }

  // Registry side of Algorithm line "insert unless a registered state
  // dominates the successor with an equal or smaller g". Superseded entries
  // are reported so their nodes can be marked stale.
  template <class NodeStateFn, class SupersedeFn, class DominanceFn>
  bool try_insert(const State& state, const Number& g, int node, NodeStateFn&& node_state,
                  SupersedeFn&& on_supersede, DominanceFn&& on_dominance) {
    auto& bucket = buckets_[signature(state)];
    for (const auto& entry : bucket) {
      DominanceOutcome rel = dominance(model_, node_state(entry.node), state);
      bool covers = rel == DominanceOutcome::left_dominates || rel == DominanceOutcome::equal;
      if (covers && g_leq(entry.g, g)) {
        if (rel == DominanceOutcome::left_dominates) {
          on_dominance(node_state(entry.node), state);
        }
        return false;
      }
    }
    std::vector<RegistryEntry> kept;
    kept.reserve(bucket.size() + 1);
    for (const auto& entry : bucket) {
      DominanceOutcome rel = dominance(model_, state, node_state(entry.node));
      bool covers = rel == DominanceOutcome::left_dominates || rel == DominanceOutcome::equal;
      if (covers && g_leq(g, entry.g)) {
        if (rel == DominanceOutcome::left_dominates) {
          on_dominance(state, node_state(entry.node));
        }
        on_supersede(entry.node);
        --size_;
      } else {
        kept.push_back(entry);
      }
    }
    kept.push_back({node, g});
    ++size_;
    bucket = std::move(kept);
    return true;
  }

  std::size_t size() const { return size_; }

 private:
  const Model& model_;
  bool use_dominance_;
  double g_epsilon_;
  std::unordered_map<std::vector<std::uint64_t>, std::vector<RegistryEntry>, VectorHash> buckets_;
  std::size_t size_ = 0;
};

std::string describe_state(const Model& model, const State& s) {
  std::string out = "<";
  bool first = true;
  for (const auto& decl : model.variables) {
    if (!first) out += ", ";
    first = false;
    out += decl.name + "=";
    switch (decl.kind) {
      case VarKind::set: out += s.sets[decl.index].str(); break;
      case VarKind::element: out += std::to_string(s.elements[decl.index]); break;
      case VarKind::numeric: out += s.numerics[decl.index].str(); break;
    }
  }
  return out + ">";
}

}  // namespace

Solution solve(const Model& model, const SolveLimits& limits, const SolveOptions& options) {
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  Solution solution;
  solution.stats.blind = model.dual_bounds.empty();

  CostFormInfo form = classify_cost_form(model);
  if (!form.supported()) {
    solution.status = SolveStatus::unsupported_cost_form;
    solution.message = form.reason;
    solution.stats.wall_time_s = elapsed();
    return solution;
  }
  const CostAlgebra algebra = *form.algebra;

  auto finish = [&](SolveStatus status, std::optional<Number> bound) {
    solution.status = status;
    solution.best_bound = std::move(bound);
    solution.stats.wall_time_s = elapsed();
    return solution;
  };

  // The target state itself must satisfy the state constraints.
  if (!check_constraints(model, model.target)) {
    return finish(SolveStatus::infeasible, std::nullopt);
  }

  std::vector<SearchNode> nodes;
  std::vector<HeapEntry> heap;
  std::uint64_t seq = 0;
  StateRegistry registry(model, options.use_dominance);
  auto node_state = [&nodes](int id) -> const State& { return nodes[id].state; };
  auto on_supersede = [&nodes](int id) { nodes[id].stale = true; };
  auto on_dominance = [&options](const State& dominating, const State& dominated) {
    if (options.dominance_observer) options.dominance_observer(dominating, dominated);
  };

  {
    Number g0 = algebra.identity();
    Number h0 = dual_bound(model, model.target);
    SearchNode root{model.target, g0, h0, algebra.combine(g0, h0)};
    nodes.push_back(std::move(root));
    registry.try_insert(model.target, g0, 0, node_state, on_supersede, on_dominance);
    heap.push_back({nodes[0].f, nodes[0].h, seq++, 0});
    solution.stats.generated = 1;
    solution.stats.peak_registry = registry.size();
  }

  // Lower bound: the f-value popped from the open list is its minimum at
  // that moment, so the running maximum over pops is a valid bound that is
  // monotone in any work budget.
  std::optional<Number> best_bound;
  auto note_bound = [&best_bound](const Number& f) {
    if (!best_bound || *best_bound < f) best_bound = f;
  };

  bool limit_hit = false;
  SolveStatus limit_status = SolveStatus::time_limit;

  while (!heap.empty()) {
    if (limits.time_seconds > 0 && elapsed() > limits.time_seconds) {
      limit_hit = true;
      limit_status = SolveStatus::time_limit;
      break;
    }

    std::pop_heap(heap.begin(), heap.end(), HeapLess{});
    HeapEntry top = heap.back();
    heap.pop_back();
    note_bound(top.f);
    SearchNode& node = nodes[top.node];
    if (node.stale) {
      ++solution.stats.stale_skipped;
      continue;
    }

    if (is_base(model, node.state)) {
      std::vector<int> path;
      for (int id = top.node; nodes[id].parent != -1; id = nodes[id].parent) {
        path.push_back(nodes[id].via_transition);
      }
      std::reverse(path.begin(), path.end());
      solution.cost = node.g;
      solution.transition_ids = std::move(path);
      return finish(SolveStatus::optimal, node.g);
    }

    ++solution.stats.expanded;
    const State state = node.state;  // copy: `nodes` may reallocate below
    const Number g = node.g;
    for (int t_id : applicable_transitions(model, state)) {
      const Transition& t = model.transitions[t_id];
      State successor = apply(model, t, state);
      if (!check_constraints(model, successor)) continue;

      EvalContext ctx{state, model.tables};
      Number weight = eval_numeric(*form.edge_weights[t_id], ctx);
      if (weight.is_negative()) {
        throw NegativeEdgeWeight(t.name, "weight " + weight.str() + " in state " +
                                             describe_state(model, state));
      }
      Number g_new = algebra.combine(g, weight);

      int node_id = static_cast<int>(nodes.size());
      if (!registry.try_insert(successor, g_new, node_id, node_state, on_supersede,
                               on_dominance)) {
        continue;
      }
      Number h = dual_bound(model, successor);
      Number f = algebra.combine(g_new, h);
      nodes.push_back({std::move(successor), g_new, h, f, top.node, t_id});
      heap.push_back({f, h, seq++, node_id});
      std::push_heap(heap.begin(), heap.end(), HeapLess{});
      ++solution.stats.generated;
      solution.stats.peak_registry = std::max<std::uint64_t>(solution.stats.peak_registry,
                                                             registry.size());
      if (solution.stats.generated >= limits.max_generated_states) {
        limit_hit = true;
        limit_status = SolveStatus::memory_limit;
        break;
      }
    }
    if (limit_hit) break;
  }

  if (limit_hit) {
    if (!best_bound) {
      // Stopped before the first pop: the open list minimum is the bound.
      for (const auto& entry : heap) {
        if (nodes[entry.node].stale) continue;
        if (!best_bound || entry.f < *best_bound) best_bound = entry.f;
      }
    }
    return finish(limit_status, best_bound);
  }
  return finish(SolveStatus::infeasible, std::nullopt);
}

std::vector<std::string> transition_names(const Model& model, const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(model.transitions.at(id).name);
  return out;
}

}  // namespace didp
