#pragma once

#include <string>
#include <vector>

#include "didp/expression.hpp"
#include "didp/model.hpp"

namespace didp {

// Canonical printer for the expression grammar. parse of print is the
// identity on ASTs; quantifier binders print as _0, _1, ... by slot.
struct PrintContext {
  const std::vector<ObjectType>* object_types = nullptr;
  const std::vector<VariableDecl>* variables = nullptr;
  const TableRegistry* tables = nullptr;

  static PrintContext of(const Model& model) {
    return {&model.object_types, &model.variables, &model.tables};
  }
};

std::string print(const ElementExpr& e, const PrintContext& ctx);
std::string print(const SetExpr& e, const PrintContext& ctx);
std::string print(const NumericExpr& e, const PrintContext& ctx);
std::string print(const Condition& e, const PrintContext& ctx);

}  // namespace didp
