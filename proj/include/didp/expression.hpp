#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "didp/state.hpp"
#include "didp/table.hpp"

namespace didp {

class ElementExpr;
class SetExpr;
class NumericExpr;
class Condition;

using ElementPtr = std::shared_ptr<const ElementExpr>;
using SetPtr = std::shared_ptr<const SetExpr>;
using NumericPtr = std::shared_ptr<const NumericExpr>;
using ConditionPtr = std::shared_ptr<const Condition>;

enum class ElementBinaryOp { add, sub, min, max };
enum class NumericBinaryOp { add, sub, mul, div, min, max };
enum class NumericUnaryOp { ceil, floor };
enum class SetBinaryOp { set_union, intersection, difference };
enum class Comparison { eq, ne, le, lt, ge, gt };

// Element expressions evaluate to an object index.
class ElementExpr {
 public:
  struct Literal {
    std::int64_t value;
  };
  struct Variable {
    int index;  // element state variable, per-kind index
  };
  struct Parameter {
    int slot;  // bound by an enclosing forall
  };
  struct TableAccess {
    int table;
    std::vector<ElementPtr> indices;
  };
  struct Binary {
    ElementBinaryOp op;
    ElementPtr lhs, rhs;
  };
  using Node = std::variant<Literal, Variable, Parameter, TableAccess, Binary>;

  explicit ElementExpr(Node node) : node(std::move(node)) {}
  Node node;
};

// Set expressions evaluate to a bitset over one object type.
class SetExpr {
 public:
  struct Literal {
    IndexSet value;
    int object_type;
  };
  struct Variable {
    int index;
  };
  struct TableAccess {
    int table;
    std::vector<ElementPtr> indices;
  };
  struct AddElement {
    ElementPtr element;
    SetPtr set;
  };
  struct RemoveElement {
    ElementPtr element;
    SetPtr set;
  };
  struct Binary {
    SetBinaryOp op;
    SetPtr lhs, rhs;
  };
  struct Complement {
    SetPtr operand;
  };
  using Node =
      std::variant<Literal, Variable, TableAccess, AddElement, RemoveElement, Binary, Complement>;

  explicit SetExpr(Node node) : node(std::move(node)) {}
  Node node;
};

// Numeric expressions evaluate to a Number. The cost placeholder stands for
// the value of the successor state and is legal only inside transition cost
// expressions.
class NumericExpr {
 public:
  struct Literal {
    Number value;
  };
  struct Variable {
    int index;
  };
  struct TableAccess {
    int table;
    std::vector<ElementPtr> indices;
  };
  struct Binary {
    NumericBinaryOp op;
    NumericPtr lhs, rhs;
  };
  struct Unary {
    NumericUnaryOp op;
    NumericPtr operand;
  };
  struct Cardinality {
    SetPtr operand;
  };
  // (sum T a1 a2 ...): element arguments fix an index, set arguments are
  // summed over; with two set arguments this is the double sum over the
  // cartesian product.
  struct SumReduction {
    int table;
    std::vector<std::variant<ElementPtr, SetPtr>> args;
  };
  struct IfThenElse {
    ConditionPtr condition;
    NumericPtr then_branch, else_branch;
  };
  struct CostPlaceholder {};
  using Node = std::variant<Literal, Variable, TableAccess, Binary, Unary, Cardinality,
                            SumReduction, IfThenElse, CostPlaceholder>;

  explicit NumericExpr(Node node) : node(std::move(node)) {}
  Node node;
};

class Condition {
 public:
  struct Literal {
    bool value;
  };
  struct TableAccess {
    int table;
    std::vector<ElementPtr> indices;
  };
  struct ElementComparison {
    Comparison op;
    ElementPtr lhs, rhs;
  };
  struct NumericComparison {
    Comparison op;
    NumericPtr lhs, rhs;
  };
  struct SetComparison {
    Comparison op;  // eq or ne
    SetPtr lhs, rhs;
  };
  struct SubsetOf {
    SetPtr lhs, rhs;  // lhs subseteq rhs
  };
  struct Membership {
    ElementPtr element;
    SetPtr set;
  };
  struct Not {
    ConditionPtr operand;
  };
  struct And {
    ConditionPtr lhs, rhs;
  };
  struct Or {
    ConditionPtr lhs, rhs;
  };
  // Evaluation-time universal quantifier over the value of a set expression.
  // The body sees the bound element through Parameter{slot}.
  struct Forall {
    int slot;
    SetPtr domain;
    ConditionPtr body;
  };
  using Node = std::variant<Literal, TableAccess, ElementComparison, NumericComparison,
                            SetComparison, SubsetOf, Membership, Not, And, Or, Forall>;

  explicit Condition(Node node) : node(std::move(node)) {}
  Node node;
};

// Everything an expression may read during evaluation. `bound_params` is the
// stack of forall-bound values, indexed by slot; `cost_value` carries
// V(S[[tau]]) while a transition cost expression is being evaluated.
struct EvalContext {
  const State& state;
  const TableRegistry& tables;
  const Number* cost_value = nullptr;
  std::vector<std::int64_t> bound_params;

  EvalContext(const State& state, const TableRegistry& tables, const Number* cost_value = nullptr)
      : state(state), tables(tables), cost_value(cost_value) {}
};

std::int64_t eval_element(const ElementExpr& e, EvalContext& ctx);
IndexSet eval_set(const SetExpr& e, EvalContext& ctx);
Number eval_numeric(const NumericExpr& e, EvalContext& ctx);
bool eval_condition(const Condition& e, EvalContext& ctx);

// Convenience wrappers that build the context in place.
std::int64_t eval_element(const ElementExpr& e, const State& s, const TableRegistry& t);
IndexSet eval_set(const SetExpr& e, const State& s, const TableRegistry& t);
Number eval_numeric(const NumericExpr& e, const State& s, const TableRegistry& t);
bool eval_condition(const Condition& e, const State& s, const TableRegistry& t);

bool contains_cost_placeholder(const NumericExpr& e);

// Structural equality of ASTs (used by round-trip tests).
bool equal(const ElementExpr& a, const ElementExpr& b);
bool equal(const SetExpr& a, const SetExpr& b);
bool equal(const NumericExpr& a, const NumericExpr& b);
bool equal(const Condition& a, const Condition& b);

// Terse factories for building expressions programmatically.
namespace expr {

ElementPtr elem_lit(std::int64_t v);
ElementPtr elem_var(int index);
ElementPtr elem_param(int slot);
ElementPtr elem_table(int table, std::vector<ElementPtr> indices);
ElementPtr ebin(ElementBinaryOp op, ElementPtr a, ElementPtr b);

SetPtr set_lit(IndexSet value, int object_type);
SetPtr set_var(int index);
SetPtr set_table(int table, std::vector<ElementPtr> indices);
SetPtr set_add(ElementPtr e, SetPtr s);
SetPtr set_remove(ElementPtr e, SetPtr s);
SetPtr sbin(SetBinaryOp op, SetPtr a, SetPtr b);
SetPtr set_complement(SetPtr s);

NumericPtr num_lit(Number v);
NumericPtr num_var(int index);
NumericPtr num_table(int table, std::vector<ElementPtr> indices);
NumericPtr nbin(NumericBinaryOp op, NumericPtr a, NumericPtr b);
NumericPtr ceil(NumericPtr a);
NumericPtr floor(NumericPtr a);
NumericPtr card(SetPtr s);
NumericPtr sum(int table, std::vector<std::variant<ElementPtr, SetPtr>> args);
NumericPtr ite(ConditionPtr c, NumericPtr t, NumericPtr f);
NumericPtr cost();

ConditionPtr bool_lit(bool v);
ConditionPtr bool_table(int table, std::vector<ElementPtr> indices);
ConditionPtr cmp(Comparison op, ElementPtr a, ElementPtr b);
ConditionPtr cmp(Comparison op, NumericPtr a, NumericPtr b);
ConditionPtr cmp(Comparison op, SetPtr a, SetPtr b);
ConditionPtr subset_of(SetPtr a, SetPtr b);
ConditionPtr is_in(ElementPtr e, SetPtr s);
ConditionPtr negate(ConditionPtr c);
ConditionPtr conj(ConditionPtr a, ConditionPtr b);
ConditionPtr disj(ConditionPtr a, ConditionPtr b);
ConditionPtr forall(int slot, SetPtr domain, ConditionPtr body);

// Shorthands used heavily by the benchmark builders.
inline NumericPtr add(NumericPtr a, NumericPtr b) { return nbin(NumericBinaryOp::add, a, b); }
inline NumericPtr sub(NumericPtr a, NumericPtr b) { return nbin(NumericBinaryOp::sub, a, b); }
inline NumericPtr mul(NumericPtr a, NumericPtr b) { return nbin(NumericBinaryOp::mul, a, b); }
inline NumericPtr div(NumericPtr a, NumericPtr b) { return nbin(NumericBinaryOp::div, a, b); }
inline NumericPtr nmin(NumericPtr a, NumericPtr b) { return nbin(NumericBinaryOp::min, a, b); }
inline NumericPtr nmax(NumericPtr a, NumericPtr b) { return nbin(NumericBinaryOp::max, a, b); }
inline ElementPtr add(ElementPtr a, ElementPtr b) { return ebin(ElementBinaryOp::add, a, b); }
inline SetPtr unite(SetPtr a, SetPtr b) { return sbin(SetBinaryOp::set_union, a, b); }
inline SetPtr intersect(SetPtr a, SetPtr b) { return sbin(SetBinaryOp::intersection, a, b); }
inline SetPtr diff(SetPtr a, SetPtr b) { return sbin(SetBinaryOp::difference, a, b); }

}  // namespace expr

}  // namespace didp
