#include "didp/printer.hpp"

#include "didp/errors.hpp"

namespace didp {

namespace {

const char* comparison_text(Comparison op) {
  switch (op) {
    case Comparison::eq: return "=";
    case Comparison::ne: return "!=";
    case Comparison::le: return "<=";
    case Comparison::lt: return "<";
    case Comparison::ge: return ">=";
    case Comparison::gt: return ">";
  }
  return "?";
}

std::string variable_name(const PrintContext& ctx, VarKind kind, int index) {
  if (ctx.variables != nullptr) {
    for (const auto& decl : *ctx.variables) {
      if (decl.kind == kind && decl.index == index) return decl.name;
    }
  }
  throw DidpError("cannot print reference to undeclared variable");
}

std::string table_name(const PrintContext& ctx, TableKind kind, int index) {
  switch (kind) {
    case TableKind::numeric: return ctx.tables->numeric.at(index).name;
    case TableKind::element: return ctx.tables->element.at(index).name;
    case TableKind::set: return ctx.tables->set.at(index).name;
    case TableKind::boolean: return ctx.tables->boolean.at(index).name;
  }
  return "?";
}

std::string print_access(const PrintContext& ctx, TableKind kind, int table,
                         const std::vector<ElementPtr>& indices) {
  std::string name = table_name(ctx, kind, table);
  if (indices.empty()) return name;  // scalar constants print bare
  std::string out = "(" + name;
  for (const auto& e : indices) out += " " + print(*e, ctx);
  out += ")";
  return out;
}

std::string real_literal(const Number& v) {
  std::string s = v.str();
  // Reals always carry a marker so they reparse as reals in continuous
  // models; exact integral reals would otherwise print as plain integers.
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

}  // namespace

std::string print(const ElementExpr& e, const PrintContext& ctx) {
  using E = ElementExpr;
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, E::Literal>) {
          return std::to_string(node.value);
        } else if constexpr (std::is_same_v<T, E::Variable>) {
          return variable_name(ctx, VarKind::element, node.index);
        } else if constexpr (std::is_same_v<T, E::Parameter>) {
          return "_" + std::to_string(node.slot);
        } else if constexpr (std::is_same_v<T, E::TableAccess>) {
          return print_access(ctx, TableKind::element, node.table, node.indices);
        } else {
          const char* op = node.op == ElementBinaryOp::add   ? "+"
                           : node.op == ElementBinaryOp::sub ? "-"
                           : node.op == ElementBinaryOp::min ? "min"
                                                             : "max";
          return std::string("(") + op + " " + print(*node.lhs, ctx) + " " +
                 print(*node.rhs, ctx) + ")";
        }
      },
      e.node);
}

std::string print(const SetExpr& e, const PrintContext& ctx) {
  using S = SetExpr;
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, S::Literal>) {
          std::string out = "(set " + ctx.object_types->at(node.object_type).name;
          node.value.for_each([&](int m) { out += " " + std::to_string(m); });
          out += ")";
          return out;
        } else if constexpr (std::is_same_v<T, S::Variable>) {
          return variable_name(ctx, VarKind::set, node.index);
        } else if constexpr (std::is_same_v<T, S::TableAccess>) {
          return print_access(ctx, TableKind::set, node.table, node.indices);
        } else if constexpr (std::is_same_v<T, S::AddElement>) {
          return "(add " + print(*node.element, ctx) + " " + print(*node.set, ctx) + ")";
        } else if constexpr (std::is_same_v<T, S::RemoveElement>) {
          return "(remove " + print(*node.element, ctx) + " " + print(*node.set, ctx) + ")";
        } else if constexpr (std::is_same_v<T, S::Binary>) {
          const char* op = node.op == SetBinaryOp::set_union      ? "union"
                           : node.op == SetBinaryOp::intersection ? "intersection"
                                                                  : "difference";
          return std::string("(") + op + " " + print(*node.lhs, ctx) + " " +
                 print(*node.rhs, ctx) + ")";
        } else {
          return "~" + print(*node.operand, ctx);
        }
      },
      e.node);
}

std::string print(const NumericExpr& e, const PrintContext& ctx) {
  using N = NumericExpr;
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, N::Literal>) {
          return node.value.is_rational() ? node.value.str() : real_literal(node.value);
        } else if constexpr (std::is_same_v<T, N::Variable>) {
          return variable_name(ctx, VarKind::numeric, node.index);
        } else if constexpr (std::is_same_v<T, N::TableAccess>) {
          return print_access(ctx, TableKind::numeric, node.table, node.indices);
        } else if constexpr (std::is_same_v<T, N::Binary>) {
          const char* op = node.op == NumericBinaryOp::add   ? "+"
                           : node.op == NumericBinaryOp::sub ? "-"
                           : node.op == NumericBinaryOp::mul ? "*"
                           : node.op == NumericBinaryOp::div ? "/"
                           : node.op == NumericBinaryOp::min ? "min"
                                                             : "max";
          return std::string("(") + op + " " + print(*node.lhs, ctx) + " " +
                 print(*node.rhs, ctx) + ")";
        } else if constexpr (std::is_same_v<T, N::Unary>) {
          return std::string("(") + (node.op == NumericUnaryOp::ceil ? "ceil" : "floor") + " " +
                 print(*node.operand, ctx) + ")";
        } else if constexpr (std::is_same_v<T, N::Cardinality>) {
          return "(card " + print(*node.operand, ctx) + ")";
        } else if constexpr (std::is_same_v<T, N::SumReduction>) {
          std::string out = "(sum " + ctx.tables->numeric.at(node.table).name;
          for (const auto& arg : node.args) {
            if (std::holds_alternative<ElementPtr>(arg)) {
              out += " " + print(*std::get<ElementPtr>(arg), ctx);
            } else {
              out += " " + print(*std::get<SetPtr>(arg), ctx);
            }
          }
          out += ")";
          return out;
        } else if constexpr (std::is_same_v<T, N::IfThenElse>) {
          return "(if " + print(*node.condition, ctx) + " " + print(*node.then_branch, ctx) +
                 " " + print(*node.else_branch, ctx) + ")";
        } else {
          return "cost";
        }
      },
      e.node);
}

std::string print(const Condition& e, const PrintContext& ctx) {
  using C = Condition;
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, C::Literal>) {
          return node.value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, C::TableAccess>) {
          return print_access(ctx, TableKind::boolean, node.table, node.indices);
        } else if constexpr (std::is_same_v<T, C::ElementComparison> ||
                             std::is_same_v<T, C::NumericComparison> ||
                             std::is_same_v<T, C::SetComparison>) {
          return std::string("(") + comparison_text(node.op) + " " + print(*node.lhs, ctx) + " " +
                 print(*node.rhs, ctx) + ")";
        } else if constexpr (std::is_same_v<T, C::SubsetOf>) {
          return "(is_subset " + print(*node.lhs, ctx) + " " + print(*node.rhs, ctx) + ")";
        } else if constexpr (std::is_same_v<T, C::Membership>) {
          return "(is_in " + print(*node.element, ctx) + " " + print(*node.set, ctx) + ")";
        } else if constexpr (std::is_same_v<T, C::Not>) {
          return "(not " + print(*node.operand, ctx) + ")";
        } else if constexpr (std::is_same_v<T, C::And>) {
          return "(and " + print(*node.lhs, ctx) + " " + print(*node.rhs, ctx) + ")";
        } else if constexpr (std::is_same_v<T, C::Or>) {
          return "(or " + print(*node.lhs, ctx) + " " + print(*node.rhs, ctx) + ")";
        } else {
          return "(forall _" + std::to_string(node.slot) + " " + print(*node.domain, ctx) + " " +
                 print(*node.body, ctx) + ")";
        }
      },
      e.node);
}

}  // namespace didp
