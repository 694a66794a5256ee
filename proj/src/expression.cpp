#include "didp/expression.hpp"

#include <functional>

#include "didp/errors.hpp"

namespace didp {

namespace {

std::int64_t bound_value(const EvalContext& ctx, int slot) {
  if (slot < 0 || slot >= static_cast<int>(ctx.bound_params.size())) {
    throw EvalError("unbound quantifier parameter slot " + std::to_string(slot));
  }
  return ctx.bound_params[slot];
}

std::vector<std::int64_t> eval_indices(const std::vector<ElementPtr>& indices, EvalContext& ctx) {
  std::vector<std::int64_t> out;
  out.reserve(indices.size());
  for (const auto& e : indices) out.push_back(eval_element(*e, ctx));
  return out;
}

bool compare_values(Comparison op, int cmp) {
  switch (op) {
    case Comparison::eq: return cmp == 0;
    case Comparison::ne: return cmp != 0;
    case Comparison::le: return cmp <= 0;
    case Comparison::lt: return cmp < 0;
    case Comparison::ge: return cmp >= 0;
    case Comparison::gt: return cmp > 0;
  }
  return false;
}

}  // namespace

std::int64_t eval_element(const ElementExpr& e, EvalContext& ctx) {
  using E = ElementExpr;
  return std::visit(
      [&](const auto& node) -> std::int64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, E::Literal>) {
          return node.value;
        } else if constexpr (std::is_same_v<T, E::Variable>) {
          return ctx.state.elements.at(node.index);
        } else if constexpr (std::is_same_v<T, E::Parameter>) {
          return bound_value(ctx, node.slot);
        } else if constexpr (std::is_same_v<T, E::TableAccess>) {
          return ctx.tables.element.at(node.table).at(eval_indices(node.indices, ctx));
        } else {
          std::int64_t a = eval_element(*node.lhs, ctx);
          std::int64_t b = eval_element(*node.rhs, ctx);
          switch (node.op) {
            case ElementBinaryOp::add: return a + b;
            case ElementBinaryOp::sub: return a - b;
            case ElementBinaryOp::min: return a < b ? a : b;
            case ElementBinaryOp::max: return a > b ? a : b;
          }
          return 0;
        }
      },
      e.node);
}

IndexSet eval_set(const SetExpr& e, EvalContext& ctx) {
  using S = SetExpr;
  return std::visit(
      [&](const auto& node) -> IndexSet {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, S::Literal>) {
          return node.value;
        } else if constexpr (std::is_same_v<T, S::Variable>) {
          return ctx.state.sets.at(node.index);
        } else if constexpr (std::is_same_v<T, S::TableAccess>) {
          return ctx.tables.set.at(node.table).at(eval_indices(node.indices, ctx));
        } else if constexpr (std::is_same_v<T, S::AddElement>) {
          IndexSet s = eval_set(*node.set, ctx);
          s.insert(eval_element(*node.element, ctx));
          return s;
        } else if constexpr (std::is_same_v<T, S::RemoveElement>) {
          IndexSet s = eval_set(*node.set, ctx);
          std::int64_t v = eval_element(*node.element, ctx);
          if (s.contains(v)) s.erase(v);
          return s;
        } else if constexpr (std::is_same_v<T, S::Binary>) {
          IndexSet a = eval_set(*node.lhs, ctx);
          IndexSet b = eval_set(*node.rhs, ctx);
          switch (node.op) {
            case SetBinaryOp::set_union: return a | b;
            case SetBinaryOp::intersection: return a & b;
            case SetBinaryOp::difference: return a - b;
          }
          return a;
        } else {
          return eval_set(*node.operand, ctx).complement();
        }
      },
      e.node);
}

Number eval_numeric(const NumericExpr& e, EvalContext& ctx) {
  using N = NumericExpr;
  return std::visit(
      [&](const auto& node) -> Number {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, N::Literal>) {
          return node.value;
        } else if constexpr (std::is_same_v<T, N::Variable>) {
          return ctx.state.numerics.at(node.index);
        } else if constexpr (std::is_same_v<T, N::TableAccess>) {
          return ctx.tables.numeric.at(node.table).at(eval_indices(node.indices, ctx));
        } else if constexpr (std::is_same_v<T, N::Binary>) {
          Number a = eval_numeric(*node.lhs, ctx);
          Number b = eval_numeric(*node.rhs, ctx);
          switch (node.op) {
            case NumericBinaryOp::add: return a + b;
            case NumericBinaryOp::sub: return a - b;
            case NumericBinaryOp::mul: return a * b;
            case NumericBinaryOp::div: return a / b;
            case NumericBinaryOp::min: return Number::min(a, b);
            case NumericBinaryOp::max: return Number::max(a, b);
          }
          return a;
        } else if constexpr (std::is_same_v<T, N::Unary>) {
          Number a = eval_numeric(*node.operand, ctx);
          return node.op == NumericUnaryOp::ceil ? a.ceil() : a.floor();
        } else if constexpr (std::is_same_v<T, N::Cardinality>) {
          return Number(static_cast<std::int64_t>(eval_set(*node.operand, ctx).count()));
        } else if constexpr (std::is_same_v<T, N::SumReduction>) {
          const NumericTable& table = ctx.tables.numeric.at(node.table);
          // Evaluate each argument once, then fold over the cartesian
          // product of the set positions.
          std::vector<std::int64_t> idx(node.args.size(), 0);
          std::vector<std::pair<std::size_t, std::vector<int>>> set_positions;
          for (std::size_t k = 0; k < node.args.size(); ++k) {
            if (std::holds_alternative<ElementPtr>(node.args[k])) {
              idx[k] = eval_element(*std::get<ElementPtr>(node.args[k]), ctx);
            } else {
              set_positions.emplace_back(
                  k, eval_set(*std::get<SetPtr>(node.args[k]), ctx).members());
            }
          }
          Number total(0);
          std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
            if (depth == set_positions.size()) {
              total = total + table.at(idx);
              return;
            }
            for (int member : set_positions[depth].second) {
              idx[set_positions[depth].first] = member;
              recurse(depth + 1);
            }
          };
          recurse(0);
          return total;
        } else if constexpr (std::is_same_v<T, N::IfThenElse>) {
          return eval_condition(*node.condition, ctx) ? eval_numeric(*node.then_branch, ctx)
                                                      : eval_numeric(*node.else_branch, ctx);
        } else {
          if (ctx.cost_value == nullptr) {
            throw EvalError("cost placeholder evaluated outside a cost expression");
          }
          return *ctx.cost_value;
        }
      },
      e.node);
}

bool eval_condition(const Condition& e, EvalContext& ctx) {
  using C = Condition;
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, C::Literal>) {
          return node.value;
        } else if constexpr (std::is_same_v<T, C::TableAccess>) {
          return ctx.tables.boolean.at(node.table).at(eval_indices(node.indices, ctx)) != 0;
        } else if constexpr (std::is_same_v<T, C::ElementComparison>) {
          std::int64_t a = eval_element(*node.lhs, ctx);
          std::int64_t b = eval_element(*node.rhs, ctx);
          return compare_values(node.op, a < b ? -1 : a > b ? 1 : 0);
        } else if constexpr (std::is_same_v<T, C::NumericComparison>) {
          return compare_values(node.op,
                                compare(eval_numeric(*node.lhs, ctx), eval_numeric(*node.rhs, ctx)));
        } else if constexpr (std::is_same_v<T, C::SetComparison>) {
          bool eq = eval_set(*node.lhs, ctx) == eval_set(*node.rhs, ctx);
          return node.op == Comparison::eq ? eq : !eq;
        } else if constexpr (std::is_same_v<T, C::SubsetOf>) {
          return eval_set(*node.lhs, ctx).subset_of(eval_set(*node.rhs, ctx));
        } else if constexpr (std::is_same_v<T, C::Membership>) {
          return eval_set(*node.set, ctx).contains(eval_element(*node.element, ctx));
        } else if constexpr (std::is_same_v<T, C::Not>) {
          return !eval_condition(*node.operand, ctx);
        } else if constexpr (std::is_same_v<T, C::And>) {
          return eval_condition(*node.lhs, ctx) && eval_condition(*node.rhs, ctx);
        } else if constexpr (std::is_same_v<T, C::Or>) {
          return eval_condition(*node.lhs, ctx) || eval_condition(*node.rhs, ctx);
        } else {
          IndexSet domain = eval_set(*node.domain, ctx);
          if (static_cast<int>(ctx.bound_params.size()) != node.slot) {
            // Slots are assigned by nesting depth; a mismatch indicates a
            // malformed AST rather than a model-level failure.
            throw EvalError("quantifier slot " + std::to_string(node.slot) +
                            " does not match binding depth " +
                            std::to_string(ctx.bound_params.size()));
          }
          bool all = true;
          ctx.bound_params.push_back(0);
          domain.for_each([&](int member) {
            if (!all) return;
            ctx.bound_params.back() = member;
            if (!eval_condition(*node.body, ctx)) all = false;
          });
          ctx.bound_params.pop_back();
          return all;
        }
      },
      e.node);
}

std::int64_t eval_element(const ElementExpr& e, const State& s, const TableRegistry& t) {
  EvalContext ctx{s, t};
  return eval_element(e, ctx);
}

IndexSet eval_set(const SetExpr& e, const State& s, const TableRegistry& t) {
  EvalContext ctx{s, t};
  return eval_set(e, ctx);
}

Number eval_numeric(const NumericExpr& e, const State& s, const TableRegistry& t) {
  EvalContext ctx{s, t};
  return eval_numeric(e, ctx);
}

bool eval_condition(const Condition& e, const State& s, const TableRegistry& t) {
  EvalContext ctx{s, t};
  return eval_condition(e, ctx);
}

bool contains_cost_placeholder(const NumericExpr& e) {
  using N = NumericExpr;
  return std::visit(
      [](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, N::CostPlaceholder>) {
          return true;
        } else if constexpr (std::is_same_v<T, N::Binary>) {
          return contains_cost_placeholder(*node.lhs) || contains_cost_placeholder(*node.rhs);
        } else if constexpr (std::is_same_v<T, N::Unary>) {
          return contains_cost_placeholder(*node.operand);
        } else if constexpr (std::is_same_v<T, N::IfThenElse>) {
          return contains_cost_placeholder(*node.then_branch) ||
                 contains_cost_placeholder(*node.else_branch);
        } else {
          return false;
        }
      },
      e.node);
}

namespace {

template <class Ptr>
bool ptr_equal(const Ptr& a, const Ptr& b) {
  return equal(*a, *b);
}

template <class Ptr>
bool vec_equal(const std::vector<Ptr>& a, const std::vector<Ptr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!ptr_equal(a[k], b[k])) return false;
  }
  return true;
}

}  // namespace

bool equal(const ElementExpr& a, const ElementExpr& b) {
  using E = ElementExpr;
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, E::Literal>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, E::Variable>) {
          return x.index == y.index;
        } else if constexpr (std::is_same_v<T, E::Parameter>) {
          return x.slot == y.slot;
        } else if constexpr (std::is_same_v<T, E::TableAccess>) {
          return x.table == y.table && vec_equal(x.indices, y.indices);
        } else {
          return x.op == y.op && ptr_equal(x.lhs, y.lhs) && ptr_equal(x.rhs, y.rhs);
        }
      },
      a.node);
}

bool equal(const SetExpr& a, const SetExpr& b) {
  using S = SetExpr;
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, S::Literal>) {
          return x.object_type == y.object_type && x.value == y.value;
        } else if constexpr (std::is_same_v<T, S::Variable>) {
          return x.index == y.index;
        } else if constexpr (std::is_same_v<T, S::TableAccess>) {
          return x.table == y.table && vec_equal(x.indices, y.indices);
        } else if constexpr (std::is_same_v<T, S::AddElement> ||
                             std::is_same_v<T, S::RemoveElement>) {
          return ptr_equal(x.element, y.element) && ptr_equal(x.set, y.set);
        } else if constexpr (std::is_same_v<T, S::Binary>) {
          return x.op == y.op && ptr_equal(x.lhs, y.lhs) && ptr_equal(x.rhs, y.rhs);
        } else {
          return ptr_equal(x.operand, y.operand);
        }
      },
      a.node);
}

bool equal(const NumericExpr& a, const NumericExpr& b) {
  using N = NumericExpr;
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, N::Literal>) {
          return x.value == y.value && x.value.is_rational() == y.value.is_rational();
        } else if constexpr (std::is_same_v<T, N::Variable>) {
          return x.index == y.index;
        } else if constexpr (std::is_same_v<T, N::TableAccess>) {
          return x.table == y.table && vec_equal(x.indices, y.indices);
        } else if constexpr (std::is_same_v<T, N::Binary>) {
          return x.op == y.op && ptr_equal(x.lhs, y.lhs) && ptr_equal(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, N::Unary>) {
          return x.op == y.op && ptr_equal(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, N::Cardinality>) {
          return ptr_equal(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, N::SumReduction>) {
          if (x.table != y.table || x.args.size() != y.args.size()) return false;
          for (std::size_t k = 0; k < x.args.size(); ++k) {
            if (x.args[k].index() != y.args[k].index()) return false;
            if (std::holds_alternative<ElementPtr>(x.args[k])) {
              if (!equal(*std::get<ElementPtr>(x.args[k]), *std::get<ElementPtr>(y.args[k]))) {
                return false;
              }
            } else if (!equal(*std::get<SetPtr>(x.args[k]), *std::get<SetPtr>(y.args[k]))) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, N::IfThenElse>) {
          return equal(*x.condition, *y.condition) && ptr_equal(x.then_branch, y.then_branch) &&
                 ptr_equal(x.else_branch, y.else_branch);
        } else {
          return true;  // CostPlaceholder
        }
      },
      a.node);
}

bool equal(const Condition& a, const Condition& b) {
  using C = Condition;
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, C::Literal>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, C::TableAccess>) {
          return x.table == y.table && vec_equal(x.indices, y.indices);
        } else if constexpr (std::is_same_v<T, C::ElementComparison> ||
                             std::is_same_v<T, C::NumericComparison> ||
                             std::is_same_v<T, C::SetComparison>) {
          return x.op == y.op && ptr_equal(x.lhs, y.lhs) && ptr_equal(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, C::SubsetOf>) {
          return ptr_equal(x.lhs, y.lhs) && ptr_equal(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, C::Membership>) {
          return ptr_equal(x.element, y.element) && ptr_equal(x.set, y.set);
        } else if constexpr (std::is_same_v<T, C::Not>) {
          return ptr_equal(x.operand, y.operand);
        } else if constexpr (std::is_same_v<T, C::And> || std::is_same_v<T, C::Or>) {
          return ptr_equal(x.lhs, y.lhs) && ptr_equal(x.rhs, y.rhs);
        } else {
          return x.slot == y.slot && ptr_equal(x.domain, y.domain) && ptr_equal(x.body, y.body);
        }
      },
      a.node);
}

namespace expr {

ElementPtr elem_lit(std::int64_t v) {
  return std::make_shared<ElementExpr>(ElementExpr::Literal{v});
}
ElementPtr elem_var(int index) {
  return std::make_shared<ElementExpr>(ElementExpr::Variable{index});
}
ElementPtr elem_param(int slot) {
  return std::make_shared<ElementExpr>(ElementExpr::Parameter{slot});
}
ElementPtr elem_table(int table, std::vector<ElementPtr> indices) {
  return std::make_shared<ElementExpr>(ElementExpr::TableAccess{table, std::move(indices)});
}
ElementPtr ebin(ElementBinaryOp op, ElementPtr a, ElementPtr b) {
  return std::make_shared<ElementExpr>(ElementExpr::Binary{op, std::move(a), std::move(b)});
}

SetPtr set_lit(IndexSet value, int object_type) {
  return std::make_shared<SetExpr>(SetExpr::Literal{std::move(value), object_type});
}
SetPtr set_var(int index) {
  return std::make_shared<SetExpr>(SetExpr::Variable{index});
}
SetPtr set_table(int table, std::vector<ElementPtr> indices) {
  return std::make_shared<SetExpr>(SetExpr::TableAccess{table, std::move(indices)});
}
SetPtr set_add(ElementPtr e, SetPtr s) {
  return std::make_shared<SetExpr>(SetExpr::AddElement{std::move(e), std::move(s)});
}
SetPtr set_remove(ElementPtr e, SetPtr s) {
  return std::make_shared<SetExpr>(SetExpr::RemoveElement{std::move(e), std::move(s)});
}
SetPtr sbin(SetBinaryOp op, SetPtr a, SetPtr b) {
  return std::make_shared<SetExpr>(SetExpr::Binary{op, std::move(a), std::move(b)});
}
SetPtr set_complement(SetPtr s) {
  return std::make_shared<SetExpr>(SetExpr::Complement{std::move(s)});
}

NumericPtr num_lit(Number v) {
  return std::make_shared<NumericExpr>(NumericExpr::Literal{v});
}
NumericPtr num_var(int index) {
  return std::make_shared<NumericExpr>(NumericExpr::Variable{index});
}
NumericPtr num_table(int table, std::vector<ElementPtr> indices) {
  return std::make_shared<NumericExpr>(NumericExpr::TableAccess{table, std::move(indices)});
}
NumericPtr nbin(NumericBinaryOp op, NumericPtr a, NumericPtr b) {
  return std::make_shared<NumericExpr>(NumericExpr::Binary{op, std::move(a), std::move(b)});
}
NumericPtr ceil(NumericPtr a) {
  return std::make_shared<NumericExpr>(NumericExpr::Unary{NumericUnaryOp::ceil, std::move(a)});
}
NumericPtr floor(NumericPtr a) {
  return std::make_shared<NumericExpr>(NumericExpr::Unary{NumericUnaryOp::floor, std::move(a)});
}
NumericPtr card(SetPtr s) {
  return std::make_shared<NumericExpr>(NumericExpr::Cardinality{std::move(s)});
}
NumericPtr sum(int table, std::vector<std::variant<ElementPtr, SetPtr>> args) {
  return std::make_shared<NumericExpr>(NumericExpr::SumReduction{table, std::move(args)});
}
NumericPtr ite(ConditionPtr c, NumericPtr t, NumericPtr f) {
  return std::make_shared<NumericExpr>(
      NumericExpr::IfThenElse{std::move(c), std::move(t), std::move(f)});
}
NumericPtr cost() {
  return std::make_shared<NumericExpr>(NumericExpr::CostPlaceholder{});
}

ConditionPtr bool_lit(bool v) {
  return std::make_shared<Condition>(Condition::Literal{v});
}
ConditionPtr bool_table(int table, std::vector<ElementPtr> indices) {
  return std::make_shared<Condition>(Condition::TableAccess{table, std::move(indices)});
}
ConditionPtr cmp(Comparison op, ElementPtr a, ElementPtr b) {
  return std::make_shared<Condition>(Condition::ElementComparison{op, std::move(a), std::move(b)});
}
ConditionPtr cmp(Comparison op, NumericPtr a, NumericPtr b) {
  return std::make_shared<Condition>(Condition::NumericComparison{op, std::move(a), std::move(b)});
}
ConditionPtr cmp(Comparison op, SetPtr a, SetPtr b) {
  if (op != Comparison::eq && op != Comparison::ne) {
    throw DidpError("set comparison supports only = and !=");
  }
  return std::make_shared<Condition>(Condition::SetComparison{op, std::move(a), std::move(b)});
}
ConditionPtr subset_of(SetPtr a, SetPtr b) {
  return std::make_shared<Condition>(Condition::SubsetOf{std::move(a), std::move(b)});
}
ConditionPtr is_in(ElementPtr e, SetPtr s) {
  return std::make_shared<Condition>(Condition::Membership{std::move(e), std::move(s)});
}
ConditionPtr negate(ConditionPtr c) {
  return std::make_shared<Condition>(Condition::Not{std::move(c)});
}
ConditionPtr conj(ConditionPtr a, ConditionPtr b) {
  return std::make_shared<Condition>(Condition::And{std::move(a), std::move(b)});
}
ConditionPtr disj(ConditionPtr a, ConditionPtr b) {
  return std::make_shared<Condition>(Condition::Or{std::move(a), std::move(b)});
}
ConditionPtr forall(int slot, SetPtr domain, ConditionPtr body) {
  return std::make_shared<Condition>(Condition::Forall{slot, std::move(domain), std::move(body)});
}

}  // namespace expr

}  // namespace didp
