#include "didp/model.hpp"

#include <functional>

#include "didp/errors.hpp"

namespace didp {

int Model::find_object_type(const std::string& name) const {
  for (std::size_t k = 0; k < object_types.size(); ++k) {
    if (object_types[k].name == name) return static_cast<int>(k);
  }
  return -1;
}

const VariableDecl* Model::find_variable(const std::string& name) const {
  for (const auto& v : variables) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

const VariableDecl* Model::variable_of(VarKind kind, int index) const {
  for (const auto& v : variables) {
    if (v.kind == kind && v.index == index) return &v;
  }
  return nullptr;
}

int Model::count_variables(VarKind kind) const {
  int n = 0;
  for (const auto& v : variables) {
    if (v.kind == kind) ++n;
  }
  return n;
}

State Model::blank_state() const {
  State s;
  s.sets.resize(count_variables(VarKind::set));
  s.elements.resize(count_variables(VarKind::element), 0);
  s.numerics.resize(count_variables(VarKind::numeric), Number(0));
  for (const auto& v : variables) {
    if (v.kind == VarKind::set) {
      s.sets[v.index] = IndexSet(object_types[v.object_type].count);
    }
  }
  return s;
}

bool transition_applicable(const Model& model, const Transition& t, const State& state) {
  EvalContext ctx{state, model.tables};
  for (const auto& pre : t.preconditions) {
    if (!eval_condition(*pre, ctx)) return false;
  }
  return true;
}

std::vector<int> applicable_transitions(const Model& model, const State& state) {
  // A forced transition whose preconditions hold suppresses everything else;
  // among forced transitions the first defined wins.
  for (std::size_t k = 0; k < model.transitions.size(); ++k) {
    const Transition& t = model.transitions[k];
    if (t.forced && transition_applicable(model, t, state)) {
      return {static_cast<int>(k)};
    }
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < model.transitions.size(); ++k) {
    const Transition& t = model.transitions[k];
    if (!t.forced && transition_applicable(model, t, state)) {
      out.push_back(static_cast<int>(k));
    }
  }
  return out;
}

State apply(const Model& model, const Transition& t, const State& state) {
  EvalContext ctx{state, model.tables};
  State next = state;
  for (const auto& [index, e] : t.set_effects) next.sets.at(index) = eval_set(*e, ctx);
  for (const auto& [index, e] : t.element_effects) next.elements.at(index) = eval_element(*e, ctx);
  for (const auto& [index, e] : t.numeric_effects) next.numerics.at(index) = eval_numeric(*e, ctx);
  return next;
}

bool is_base(const Model& model, const State& state) {
  EvalContext ctx{state, model.tables};
  for (const auto& base : model.base_cases) {
    bool all = true;
    for (const auto& c : base) {
      if (!eval_condition(*c, ctx)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool check_constraints(const Model& model, const State& state) {
  EvalContext ctx{state, model.tables};
  for (const auto& c : model.state_constraints) {
    if (!eval_condition(*c, ctx)) return false;
  }
  return true;
}

namespace {

// -1: a is better, 1: b is better, 0: equal, on one resource variable.
int resource_compare(const VariableDecl& decl, const State& a, const State& b) {
  int cmp = 0;
  if (decl.kind == VarKind::element) {
    std::int64_t x = a.elements[decl.index], y = b.elements[decl.index];
    cmp = x < y ? -1 : x > y ? 1 : 0;
  } else {
    cmp = compare(a.numerics[decl.index], b.numerics[decl.index]);
  }
  if (decl.preference == Preference::more) cmp = -cmp;
  return cmp;  // after flip: -1 means a preferred
}

}  // namespace

DominanceOutcome dominance(const Model& model, const State& a, const State& b) {
  bool a_strict = false, b_strict = false;
  for (const auto& decl : model.variables) {
    if (!decl.is_resource()) {
      bool same = false;
      switch (decl.kind) {
        case VarKind::set: same = a.sets[decl.index] == b.sets[decl.index]; break;
        case VarKind::element: same = a.elements[decl.index] == b.elements[decl.index]; break;
        case VarKind::numeric: same = a.numerics[decl.index] == b.numerics[decl.index]; break;
      }
      if (!same) return DominanceOutcome::incomparable;
    } else {
      int cmp = resource_compare(decl, a, b);
      if (cmp < 0) a_strict = true;
      if (cmp > 0) b_strict = true;
    }
  }
  if (a_strict && b_strict) return DominanceOutcome::incomparable;
  if (a_strict) return DominanceOutcome::left_dominates;
  if (b_strict) return DominanceOutcome::right_dominates;
  return DominanceOutcome::equal;
}

Number dual_bound(const Model& model, const State& state) {
  const Number identity(0);
  if (model.dual_bounds.empty()) return identity;
  EvalContext ctx{state, model.tables};
  std::optional<Number> combined;
  for (const auto& b : model.dual_bounds) {
    Number v = eval_numeric(*b, ctx);
    if (!combined) {
      combined = v;
    } else {
      combined = model.reduce == Reduce::min ? Number::max(*combined, v)
                                             : Number::min(*combined, v);
    }
  }
  if (model.reduce == Reduce::min) return Number::max(identity, *combined);
  return *combined;
}

namespace {

// Expression walker used by validate_model. Checks table ids and arities,
// variable indices, quantifier slot discipline, and set-universe agreement
// where it can be inferred statically.
struct Checker {
  const Model& model;
  std::vector<Diagnostic>& diags;
  std::string where;
  int quantifier_depth = 0;
  bool allow_cost = false;

  void error(const std::string& msg) {
    diags.push_back({Diagnostic::Severity::error, where + ": " + msg});
  }

  void check_indices(TableKind kind, int table, const std::vector<ElementPtr>& indices) {
    int arity = -1;
    std::string name = "?";
    switch (kind) {
      case TableKind::numeric:
        if (table < 0 || table >= static_cast<int>(model.tables.numeric.size())) {
          error("numeric table id out of range");
          return;
        }
        arity = model.tables.numeric[table].arity();
        name = model.tables.numeric[table].name;
        break;
      case TableKind::element:
        if (table < 0 || table >= static_cast<int>(model.tables.element.size())) {
          error("element table id out of range");
          return;
        }
        arity = model.tables.element[table].arity();
        name = model.tables.element[table].name;
        break;
      case TableKind::set:
        if (table < 0 || table >= static_cast<int>(model.tables.set.size())) {
          error("set table id out of range");
          return;
        }
        arity = model.tables.set[table].arity();
        name = model.tables.set[table].name;
        break;
      case TableKind::boolean:
        if (table < 0 || table >= static_cast<int>(model.tables.boolean.size())) {
          error("boolean table id out of range");
          return;
        }
        arity = model.tables.boolean[table].arity();
        name = model.tables.boolean[table].name;
        break;
    }
    if (arity != static_cast<int>(indices.size())) {
      error("table '" + name + "' has arity " + std::to_string(arity) + " but is accessed with " +
            std::to_string(indices.size()) + " indices");
    }
    for (const auto& e : indices) visit(*e);
  }

  void visit(const ElementExpr& e) {
    using E = ElementExpr;
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, E::Literal>) {
            if (node.value < 0) error("negative element literal");
          } else if constexpr (std::is_same_v<T, E::Variable>) {
            if (model.variable_of(VarKind::element, node.index) == nullptr) {
              error("element variable index out of range");
            }
          } else if constexpr (std::is_same_v<T, E::Parameter>) {
            if (node.slot < 0 || node.slot >= quantifier_depth) {
              error("parameter slot " + std::to_string(node.slot) + " not bound here");
            }
          } else if constexpr (std::is_same_v<T, E::TableAccess>) {
            check_indices(TableKind::element, node.table, node.indices);
          } else {
            visit(*node.lhs);
            visit(*node.rhs);
          }
        },
        e.node);
  }

  // Returns the inferred object type of a set expression, or -1 if unknown.
  int visit(const SetExpr& e) {
    using S = SetExpr;
    return std::visit(
        [&](const auto& node) -> int {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, S::Literal>) {
            if (node.object_type < 0 ||
                node.object_type >= static_cast<int>(model.object_types.size())) {
              error("set literal references unknown object type");
              return -1;
            }
            if (node.value.universe() != model.object_types[node.object_type].count) {
              error("set literal width disagrees with its object type");
            }
            return node.object_type;
          } else if constexpr (std::is_same_v<T, S::Variable>) {
            const VariableDecl* decl = model.variable_of(VarKind::set, node.index);
            if (decl == nullptr) {
              error("set variable index out of range");
              return -1;
            }
            return decl->object_type;
          } else if constexpr (std::is_same_v<T, S::TableAccess>) {
            check_indices(TableKind::set, node.table, node.indices);
            if (node.table >= 0 && node.table < static_cast<int>(model.tables.set.size())) {
              return model.tables.set[node.table].object_type;
            }
            return -1;
          } else if constexpr (std::is_same_v<T, S::AddElement> ||
                               std::is_same_v<T, S::RemoveElement>) {
            visit(*node.element);
            return visit(*node.set);
          } else if constexpr (std::is_same_v<T, S::Binary>) {
            int a = visit(*node.lhs);
            int b = visit(*node.rhs);
            if (a >= 0 && b >= 0 && a != b) {
              error("set operation mixes object types '" + model.object_types[a].name + "' and '" +
                    model.object_types[b].name + "'");
            }
            return a >= 0 ? a : b;
          } else {
            return visit(*node.operand);
          }
        },
        e.node);
  }

  void visit(const NumericExpr& e) {
    using N = NumericExpr;
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, N::Literal>) {
          } else if constexpr (std::is_same_v<T, N::Variable>) {
            if (model.variable_of(VarKind::numeric, node.index) == nullptr) {
              error("numeric variable index out of range");
            }
          } else if constexpr (std::is_same_v<T, N::TableAccess>) {
            check_indices(TableKind::numeric, node.table, node.indices);
          } else if constexpr (std::is_same_v<T, N::Binary>) {
            visit(*node.lhs);
            visit(*node.rhs);
          } else if constexpr (std::is_same_v<T, N::Unary>) {
            visit(*node.operand);
          } else if constexpr (std::is_same_v<T, N::Cardinality>) {
            visit(*node.operand);
          } else if constexpr (std::is_same_v<T, N::SumReduction>) {
            if (node.table < 0 || node.table >= static_cast<int>(model.tables.numeric.size())) {
              error("sum reduction over unknown numeric table");
              return;
            }
            const auto& table = model.tables.numeric[node.table];
            if (static_cast<int>(node.args.size()) != table.arity()) {
              error("sum over table '" + table.name + "' has " + std::to_string(node.args.size()) +
                    " arguments for arity " + std::to_string(table.arity()));
            }
            for (const auto& arg : node.args) {
              if (std::holds_alternative<ElementPtr>(arg)) {
                visit(*std::get<ElementPtr>(arg));
              } else {
                visit(*std::get<SetPtr>(arg));
              }
            }
          } else if constexpr (std::is_same_v<T, N::IfThenElse>) {
            visit(*node.condition);
            visit(*node.then_branch);
            visit(*node.else_branch);
          } else {
            if (!allow_cost) error("cost placeholder outside a transition cost expression");
          }
        },
        e.node);
  }

  void visit(const Condition& e) {
    using C = Condition;
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, C::Literal>) {
          } else if constexpr (std::is_same_v<T, C::TableAccess>) {
            check_indices(TableKind::boolean, node.table, node.indices);
          } else if constexpr (std::is_same_v<T, C::ElementComparison>) {
            visit(*node.lhs);
            visit(*node.rhs);
          } else if constexpr (std::is_same_v<T, C::NumericComparison>) {
            visit(*node.lhs);
            visit(*node.rhs);
          } else if constexpr (std::is_same_v<T, C::SetComparison>) {
            if (node.op != Comparison::eq && node.op != Comparison::ne) {
              error("set comparison must be = or !=");
            }
            visit(*node.lhs);
            visit(*node.rhs);
          } else if constexpr (std::is_same_v<T, C::SubsetOf>) {
            visit(*node.lhs);
            visit(*node.rhs);
          } else if constexpr (std::is_same_v<T, C::Membership>) {
            visit(*node.element);
            visit(*node.set);
          } else if constexpr (std::is_same_v<T, C::Not>) {
            visit(*node.operand);
          } else if constexpr (std::is_same_v<T, C::And> || std::is_same_v<T, C::Or>) {
            visit(*node.lhs);
            visit(*node.rhs);
          } else {
            if (node.slot != quantifier_depth) {
              error("forall slot " + std::to_string(node.slot) + " out of nesting order");
            }
            visit(*node.domain);
            ++quantifier_depth;
            visit(*node.body);
            --quantifier_depth;
          }
        },
        e.node);
  }
};

}  // namespace

std::vector<Diagnostic> validate_model(const Model& model) {
  std::vector<Diagnostic> diags;
  auto error = [&](const std::string& m) {
    diags.push_back({Diagnostic::Severity::error, m});
  };
  auto warning = [&](const std::string& m) {
    diags.push_back({Diagnostic::Severity::warning, m});
  };

  // Declarations.
  for (const auto& v : model.variables) {
    if (v.kind != VarKind::numeric &&
        (v.object_type < 0 || v.object_type >= static_cast<int>(model.object_types.size()))) {
      error("variable '" + v.name + "' references an undeclared object type");
    }
    if (v.kind == VarKind::set && v.preference != Preference::none) {
      error("set variable '" + v.name + "' cannot be a resource variable");
    }
  }
  for (std::size_t a = 0; a < model.variables.size(); ++a) {
    for (std::size_t b = a + 1; b < model.variables.size(); ++b) {
      if (model.variables[a].name == model.variables[b].name) {
        error("duplicate variable name '" + model.variables[a].name + "'");
      }
    }
  }

  // Target state shape.
  if (static_cast<int>(model.target.sets.size()) != model.count_variables(VarKind::set) ||
      static_cast<int>(model.target.elements.size()) != model.count_variables(VarKind::element) ||
      static_cast<int>(model.target.numerics.size()) != model.count_variables(VarKind::numeric)) {
    error("target state is not a full assignment");
  } else {
    for (const auto& v : model.variables) {
      if (v.kind == VarKind::element) {
        std::int64_t value = model.target.elements[v.index];
        if (v.object_type >= 0 && (value < 0 || value >= model.object_types[v.object_type].count)) {
          error("target value of element variable '" + v.name + "' is out of range");
        }
      } else if (v.kind == VarKind::set && v.object_type >= 0) {
        if (model.target.sets[v.index].universe() != model.object_types[v.object_type].count) {
          error("target value of set variable '" + v.name + "' has the wrong universe");
        }
      }
    }
  }

  // Table storage consistency.
  for (const auto& t : model.tables.numeric) {
    if (t.values.size() != t.size()) {
      error("numeric table '" + t.name + "' storage does not match its dimensions");
    }
  }
  for (const auto& t : model.tables.element) {
    if (t.values.size() != t.size()) {
      error("element table '" + t.name + "' storage does not match its dimensions");
    }
    if (t.object_type >= 0 && t.object_type < static_cast<int>(model.object_types.size())) {
      for (auto v : t.values) {
        if (v < 0 || v >= model.object_types[t.object_type].count) {
          error("element table '" + t.name + "' holds an out-of-range entry");
          break;
        }
      }
    }
  }
  for (const auto& t : model.tables.set) {
    if (t.values.size() != t.size()) {
      error("set table '" + t.name + "' storage does not match its dimensions");
    }
  }
  for (const auto& t : model.tables.boolean) {
    if (t.values.size() != t.size()) {
      error("boolean table '" + t.name + "' storage does not match its dimensions");
    }
  }

  // Expressions.
  Checker checker{model, diags, ""};
  for (std::size_t k = 0; k < model.state_constraints.size(); ++k) {
    checker.where = "state constraint " + std::to_string(k);
    checker.allow_cost = false;
    checker.visit(*model.state_constraints[k]);
  }
  for (std::size_t k = 0; k < model.base_cases.size(); ++k) {
    checker.where = "base case " + std::to_string(k);
    for (const auto& c : model.base_cases[k]) checker.visit(*c);
  }
  for (std::size_t k = 0; k < model.dual_bounds.size(); ++k) {
    checker.where = "dual bound " + std::to_string(k);
    checker.visit(*model.dual_bounds[k]);
  }
  for (std::size_t k = 0; k < model.transitions.size(); ++k) {
    const Transition& t = model.transitions[k];
    checker.where = "transition '" + t.name + "'";
    for (const auto& pre : t.preconditions) checker.visit(*pre);
    for (const auto& [index, e] : t.set_effects) {
      if (model.variable_of(VarKind::set, index) == nullptr) {
        error("transition '" + t.name + "' has an effect on an unknown set variable");
      }
      checker.visit(*e);
    }
    for (const auto& [index, e] : t.element_effects) {
      if (model.variable_of(VarKind::element, index) == nullptr) {
        error("transition '" + t.name + "' has an effect on an unknown element variable");
      }
      checker.visit(*e);
    }
    for (const auto& [index, e] : t.numeric_effects) {
      if (model.variable_of(VarKind::numeric, index) == nullptr) {
        error("transition '" + t.name + "' has an effect on an unknown numeric variable");
      }
      checker.visit(*e);
    }
    if (!t.cost) {
      error("transition '" + t.name + "' has no cost expression");
    } else {
      checker.allow_cost = true;
      checker.visit(*t.cost);
      checker.allow_cost = false;
      if (!contains_cost_placeholder(*t.cost)) {
        warning("transition '" + t.name + "' has a constant cost expression");
      }
    }
  }

  if (model.base_cases.empty()) {
    warning("model declares no base case; every search is infeasible");
  }
  return diags;
}

Model erase_preferences(const Model& model) {
  Model copy = model;
  for (auto& v : copy.variables) v.preference = Preference::none;
  return copy;
}

}  // namespace didp
