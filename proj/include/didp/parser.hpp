#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "didp/expression.hpp"
#include "didp/model.hpp"

namespace didp {

enum class ExpressionKind { element, set, numeric, condition };

// Name resolution scope for expression text. Quantifier binders declared by
// an enclosing construct (YAML forall, transition templates being parsed
// inside a forall body) appear in `slot_params`, ground template parameters
// in `ground_params`.
struct ParseContext {
  const std::vector<ObjectType>* object_types = nullptr;
  const std::vector<VariableDecl>* variables = nullptr;
  const TableRegistry* tables = nullptr;
  CostType cost_type = CostType::integer;
  std::vector<std::pair<std::string, std::int64_t>> ground_params;
  std::vector<std::string> slot_params;

  static ParseContext of(const Model& model) {
    ParseContext ctx;
    ctx.object_types = &model.object_types;
    ctx.variables = &model.variables;
    ctx.tables = &model.tables;
    ctx.cost_type = model.cost_type;
    return ctx;
  }
};

struct ParsedExpression {
  ExpressionKind kind;
  ElementPtr element;
  SetPtr set;
  NumericPtr numeric;
  ConditionPtr condition;
};

// Parses one expression of the requested kind; total and deterministic.
// Throws ParseError{position, reason} on unknown identifiers, arity or kind
// mismatches, and malformed parentheses.
ParsedExpression parse_expression(const std::string& text, ExpressionKind kind,
                                  const ParseContext& ctx);

ElementPtr parse_element(const std::string& text, const ParseContext& ctx);
SetPtr parse_set(const std::string& text, const ParseContext& ctx);
NumericPtr parse_numeric(const std::string& text, const ParseContext& ctx);
ConditionPtr parse_condition(const std::string& text, const ParseContext& ctx);

}  // namespace didp
