#include "didp/parser.hpp"

#include <cctype>
#include <optional>

#include "didp/errors.hpp"

namespace didp {

namespace {

struct Token {
  enum Kind { lparen, rparen, tilde, number, symbol, end };
  Kind kind = end;
  std::string text;
  std::size_t pos = 0;
  Number value;              // only for number tokens
  bool integral = false;     // plain integer literal: kind stays open
  std::int64_t int_value = 0;
};

bool is_atom_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '~';
}

// Literals: -?digits, -?digits.digits (exact decimal), -?digits/digits
// (exact fraction). Everything else is a symbol.
std::optional<Token> classify_number(const std::string& atom, std::size_t pos, CostType cost_type) {
  std::size_t k = 0;
  bool negative = false;
  if (k < atom.size() && atom[k] == '-') {
    negative = true;
    ++k;
  }
  std::size_t digits_start = k;
  while (k < atom.size() && std::isdigit(static_cast<unsigned char>(atom[k]))) ++k;
  if (k == digits_start) return std::nullopt;
  std::int64_t int_part = std::stoll(atom.substr(digits_start, k - digits_start));
  Token tok;
  tok.kind = Token::number;
  tok.text = atom;
  tok.pos = pos;
  if (k == atom.size()) {
    tok.integral = true;
    tok.int_value = negative ? -int_part : int_part;
    tok.value = Number(tok.int_value);
    return tok;
  }
  if (atom[k] == '.') {
    std::size_t frac_start = ++k;
    while (k < atom.size() && std::isdigit(static_cast<unsigned char>(atom[k]))) ++k;
    if (k != atom.size() || k == frac_start) return std::nullopt;
    std::string frac = atom.substr(frac_start);
    if (cost_type == CostType::continuous) {
      tok.value = Number::real(std::stod(atom));
    } else {
      std::int64_t den = 1;
      std::int64_t num = int_part;
      for (char c : frac) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
      tok.value = Number::rational(negative ? -num : num, den);
    }
    return tok;
  }
  if (atom[k] == '/') {
    std::size_t den_start = ++k;
    while (k < atom.size() && std::isdigit(static_cast<unsigned char>(atom[k]))) ++k;
    if (k != atom.size() || k == den_start) return std::nullopt;
    std::int64_t den = std::stoll(atom.substr(den_start));
    if (den == 0) throw ParseError(pos, "fraction literal with zero denominator");
    tok.value = Number::rational(negative ? -int_part : int_part, den);
    return tok;
  }
  return std::nullopt;
}

std::vector<Token> tokenize(const std::string& text, CostType cost_type) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < text.size()) {
    char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::lparen, "(", k, {}, false, 0});
      ++k;
    } else if (c == ')') {
      out.push_back({Token::rparen, ")", k, {}, false, 0});
      ++k;
    } else if (c == '~') {
      out.push_back({Token::tilde, "~", k, {}, false, 0});
      ++k;
    } else {
      std::size_t start = k;
      while (k < text.size() && is_atom_char(text[k])) ++k;
      std::string atom = text.substr(start, k - start);
      if (auto num = classify_number(atom, start, cost_type)) {
        out.push_back(*num);
      } else {
        out.push_back({Token::symbol, atom, start, {}, false, 0});
      }
    }
  }
  out.push_back({Token::end, "", text.size(), {}, false, 0});
  return out;
}

// A parsed operand. Integer literals, and arithmetic built purely from
// them, stay open between the element and numeric lanes (`dual`); both
// versions are carried until the surrounding context commits one.
struct Any {
  ElementPtr element;
  SetPtr set;
  NumericPtr numeric;
  ConditionPtr condition;
  bool dual = false;
  std::size_t pos = 0;

  bool element_only() const { return element != nullptr && !dual; }
  bool numeric_only() const { return numeric != nullptr && !dual; }
};

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx)
      : ctx_(ctx), tokens_(tokenize(text, ctx.cost_type)) {
    binders_ = ctx.slot_params;
  }

  Any parse_full() {
    Any result = parse_value();
    if (peek().kind != Token::end) {
      throw ParseError(peek().pos, "unexpected trailing input '" + peek().text + "'");
    }
    return result;
  }

 private:
  const Token& peek() const { return tokens_[cur_]; }
  const Token& next() { return tokens_[cur_++]; }

  void expect_rparen() {
    if (peek().kind != Token::rparen) {
      throw ParseError(peek().pos, "expected ')'");
    }
    ++cur_;
  }

  [[noreturn]] void fail(std::size_t pos, const std::string& reason) const {
    throw ParseError(pos, reason);
  }

  ElementPtr to_element(Any& a) {
    if (a.element) return a.element;
    fail(a.pos, "expected an element expression");
  }

  NumericPtr to_numeric(Any& a) {
    if (a.numeric) return a.numeric;
    fail(a.pos, "expected a numeric expression");
  }

  SetPtr to_set(Any& a) {
    if (a.set) return a.set;
    fail(a.pos, "expected a set expression");
  }

  ConditionPtr to_condition(Any& a) {
    if (a.condition) return a.condition;
    fail(a.pos, "expected a condition");
  }

  Any parse_value() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::lparen: {
        ++cur_;
        return parse_compound(tok.pos);
      }
      case Token::tilde: {
        ++cur_;
        Any operand = parse_value();
        Any out;
        out.set = expr::set_complement(to_set(operand));
        out.pos = tok.pos;
        return out;
      }
      case Token::number: {
        ++cur_;
        Any out;
        out.pos = tok.pos;
        if (tok.integral) {
          out.element = expr::elem_lit(tok.int_value);
          out.numeric = expr::num_lit(tok.value);
          out.dual = true;
        } else {
          out.numeric = expr::num_lit(tok.value);
        }
        return out;
      }
      case Token::symbol: {
        ++cur_;
        return resolve_symbol(tok);
      }
      case Token::rparen:
        fail(tok.pos, "unexpected ')'");
      case Token::end:
        fail(tok.pos, "unexpected end of input");
    }
    fail(tok.pos, "unexpected token");
  }

  Any resolve_symbol(const Token& tok) {
    Any out;
    out.pos = tok.pos;
    const std::string& name = tok.text;
    if (name == "cost") {
      out.numeric = expr::cost();
      return out;
    }
    if (name == "true" || name == "false") {
      out.condition = expr::bool_lit(name == "true");
      return out;
    }
    // Innermost quantifier binders shadow everything else.
    for (int k = static_cast<int>(binders_.size()) - 1; k >= 0; --k) {
      if (binders_[k] == name) {
        out.element = expr::elem_param(k);
        return out;
      }
    }
    for (const auto& [pname, value] : ctx_.ground_params) {
      if (pname == name) {
        out.element = expr::elem_lit(value);
        return out;
      }
    }
    if (ctx_.variables != nullptr) {
      for (const auto& decl : *ctx_.variables) {
        if (decl.name != name) continue;
        switch (decl.kind) {
          case VarKind::element: out.element = expr::elem_var(decl.index); break;
          case VarKind::set: out.set = expr::set_var(decl.index); break;
          case VarKind::numeric: out.numeric = expr::num_var(decl.index); break;
        }
        return out;
      }
    }
    if (ctx_.tables != nullptr) {
      if (auto found = ctx_.tables->find(name)) {
        return table_access(*found, {}, tok.pos, /*bare=*/true);
      }
    }
    fail(tok.pos, "unknown identifier '" + name + "'");
  }

  Any table_access(std::pair<TableKind, int> table, std::vector<ElementPtr> indices,
                   std::size_t pos, bool bare) {
    auto [kind, id] = table;
    int arity = 0;
    std::string name;
    switch (kind) {
      case TableKind::numeric:
        arity = ctx_.tables->numeric[id].arity();
        name = ctx_.tables->numeric[id].name;
        break;
      case TableKind::element:
        arity = ctx_.tables->element[id].arity();
        name = ctx_.tables->element[id].name;
        break;
      case TableKind::set:
        arity = ctx_.tables->set[id].arity();
        name = ctx_.tables->set[id].name;
        break;
      case TableKind::boolean:
        arity = ctx_.tables->boolean[id].arity();
        name = ctx_.tables->boolean[id].name;
        break;
    }
    if (bare && arity != 0) {
      fail(pos, "table '" + name + "' has arity " + std::to_string(arity) +
                    " and needs indices");
    }
    if (!bare && arity != static_cast<int>(indices.size())) {
      fail(pos, "table '" + name + "' has arity " + std::to_string(arity) + " but got " +
                    std::to_string(indices.size()) + " indices");
    }
    Any out;
    out.pos = pos;
    switch (kind) {
      case TableKind::numeric: out.numeric = expr::num_table(id, std::move(indices)); break;
      case TableKind::element: out.element = expr::elem_table(id, std::move(indices)); break;
      case TableKind::set: out.set = expr::set_table(id, std::move(indices)); break;
      case TableKind::boolean: out.condition = expr::bool_table(id, std::move(indices)); break;
    }
    return out;
  }

  Any parse_compound(std::size_t open_pos) {
    if (peek().kind != Token::symbol) {
      fail(peek().pos, "expected an operator or table name after '('");
    }
    Token head = next();
    const std::string& op = head.text;
    Any out;
    out.pos = open_pos;

    auto arith2 = [&](ElementBinaryOp eop, NumericBinaryOp nop) {
      Any a = parse_value();
      Any b = parse_value();
      expect_rparen();
      if (a.set || b.set || a.condition || b.condition) {
        fail(open_pos, "'" + op + "' expects element or numeric operands");
      }
      if (a.element_only() || b.element_only()) {
        if (a.numeric_only() || b.numeric_only()) {
          fail(open_pos, "'" + op + "' cannot mix element and numeric operands");
        }
        out.element = expr::ebin(eop, to_element(a), to_element(b));
      } else if (a.numeric_only() || b.numeric_only()) {
        out.numeric = expr::nbin(nop, to_numeric(a), to_numeric(b));
      } else {
        // Both operands are literal-only: keep both readings open.
        out.element = expr::ebin(eop, a.element, b.element);
        out.numeric = expr::nbin(nop, a.numeric, b.numeric);
        out.dual = true;
      }
    };

    if (op == "+") {
      arith2(ElementBinaryOp::add, NumericBinaryOp::add);
    } else if (op == "-") {
      arith2(ElementBinaryOp::sub, NumericBinaryOp::sub);
    } else if (op == "min") {
      arith2(ElementBinaryOp::min, NumericBinaryOp::min);
    } else if (op == "max") {
      arith2(ElementBinaryOp::max, NumericBinaryOp::max);
    } else if (op == "*" || op == "/") {
      Any a = parse_value();
      Any b = parse_value();
      expect_rparen();
      out.numeric = expr::nbin(op == "*" ? NumericBinaryOp::mul : NumericBinaryOp::div,
                               to_numeric(a), to_numeric(b));
    } else if (op == "ceil" || op == "floor") {
      Any a = parse_value();
      expect_rparen();
      out.numeric = op == "ceil" ? expr::ceil(to_numeric(a)) : expr::floor(to_numeric(a));
    } else if (op == "card") {
      Any a = parse_value();
      expect_rparen();
      out.numeric = expr::card(to_set(a));
    } else if (op == "sum") {
      if (peek().kind != Token::symbol) fail(peek().pos, "'sum' expects a table name");
      Token table_tok = next();
      auto found = ctx_.tables ? ctx_.tables->find(table_tok.text) : std::nullopt;
      if (!found || found->first != TableKind::numeric) {
        fail(table_tok.pos, "'" + table_tok.text + "' is not a numeric table");
      }
      const NumericTable& table = ctx_.tables->numeric[found->second];
      std::vector<std::variant<ElementPtr, SetPtr>> args;
      while (peek().kind != Token::rparen && peek().kind != Token::end) {
        Any a = parse_value();
        if (a.set) {
          args.emplace_back(a.set);
        } else {
          args.emplace_back(to_element(a));
        }
      }
      expect_rparen();
      if (static_cast<int>(args.size()) != table.arity()) {
        fail(open_pos, "sum over table '" + table.name + "' needs " +
                           std::to_string(table.arity()) + " arguments, got " +
                           std::to_string(args.size()));
      }
      out.numeric = expr::sum(found->second, std::move(args));
    } else if (op == "if") {
      Any c = parse_value();
      Any a = parse_value();
      Any b = parse_value();
      expect_rparen();
      out.numeric = expr::ite(to_condition(c), to_numeric(a), to_numeric(b));
    } else if (op == "set") {
      if (peek().kind != Token::symbol) fail(peek().pos, "'set' expects an object type name");
      Token type_tok = next();
      int type_index = -1;
      if (ctx_.object_types != nullptr) {
        for (std::size_t k = 0; k < ctx_.object_types->size(); ++k) {
          if ((*ctx_.object_types)[k].name == type_tok.text) {
            type_index = static_cast<int>(k);
            break;
          }
        }
      }
      if (type_index < 0) fail(type_tok.pos, "unknown object type '" + type_tok.text + "'");
      IndexSet value((*ctx_.object_types)[type_index].count);
      while (peek().kind != Token::rparen && peek().kind != Token::end) {
        Any member = parse_value();
        const auto* lit = member.element != nullptr
                              ? std::get_if<ElementExpr::Literal>(&member.element->node)
                              : nullptr;
        if (lit == nullptr) {
          fail(member.pos, "set literal members must be constant indices");
        }
        std::int64_t index = lit->value;
        if (index < 0 || index >= value.universe()) {
          fail(member.pos, "set literal member " + std::to_string(index) +
                               " outside object type '" + type_tok.text + "'");
        }
        value.insert(index);
      }
      expect_rparen();
      out.set = expr::set_lit(std::move(value), type_index);
    } else if (op == "union" || op == "intersection" || op == "difference") {
      Any a = parse_value();
      Any b = parse_value();
      expect_rparen();
      SetBinaryOp sop = op == "union" ? SetBinaryOp::set_union
                        : op == "intersection" ? SetBinaryOp::intersection
                                               : SetBinaryOp::difference;
      out.set = expr::sbin(sop, to_set(a), to_set(b));
    } else if (op == "add" || op == "remove") {
      Any e = parse_value();
      Any s = parse_value();
      expect_rparen();
      out.set = op == "add" ? expr::set_add(to_element(e), to_set(s))
                            : expr::set_remove(to_element(e), to_set(s));
    } else if (op == "complement") {
      Any a = parse_value();
      expect_rparen();
      out.set = expr::set_complement(to_set(a));
    } else if (op == "not") {
      Any a = parse_value();
      expect_rparen();
      out.condition = expr::negate(to_condition(a));
    } else if (op == "and" || op == "or") {
      Any a = parse_value();
      Any b = parse_value();
      expect_rparen();
      out.condition = op == "and" ? expr::conj(to_condition(a), to_condition(b))
                                  : expr::disj(to_condition(a), to_condition(b));
    } else if (op == "is_in") {
      Any e = parse_value();
      Any s = parse_value();
      expect_rparen();
      out.condition = expr::is_in(to_element(e), to_set(s));
    } else if (op == "is_subset") {
      Any a = parse_value();
      Any b = parse_value();
      expect_rparen();
      out.condition = expr::subset_of(to_set(a), to_set(b));
    } else if (op == "=" || op == "!=" || op == "<=" || op == "<" || op == ">=" || op == ">") {
      Comparison cop = op == "=" ? Comparison::eq
                       : op == "!=" ? Comparison::ne
                       : op == "<=" ? Comparison::le
                       : op == "<" ? Comparison::lt
                       : op == ">=" ? Comparison::ge
                                    : Comparison::gt;
      Any a = parse_value();
      Any b = parse_value();
      expect_rparen();
      if (a.set != nullptr || b.set != nullptr) {
        if (cop != Comparison::eq && cop != Comparison::ne) {
          fail(open_pos, "sets support only '=' and '!=' (use is_subset for inclusion)");
        }
        out.condition = expr::cmp(cop, to_set(a), to_set(b));
      } else if (a.element_only() || b.element_only()) {
        if (a.numeric_only() || b.numeric_only()) {
          fail(open_pos, "cannot compare an element with a numeric expression");
        }
        out.condition = expr::cmp(cop, to_element(a), to_element(b));
      } else {
        out.condition = expr::cmp(cop, to_numeric(a), to_numeric(b));
      }
    } else if (op == "forall") {
      if (peek().kind != Token::symbol) fail(peek().pos, "'forall' expects a binder name");
      Token binder = next();
      Any domain = parse_value();
      SetPtr domain_set = to_set(domain);
      int slot = static_cast<int>(binders_.size());
      binders_.push_back(binder.text);
      Any body = parse_value();
      binders_.pop_back();
      expect_rparen();
      out.condition = expr::forall(slot, std::move(domain_set), to_condition(body));
    } else {
      // Table access: (name idx...).
      auto found = ctx_.tables ? ctx_.tables->find(op) : std::nullopt;
      if (!found) fail(head.pos, "unknown operator or table '" + op + "'");
      std::vector<ElementPtr> indices;
      while (peek().kind != Token::rparen && peek().kind != Token::end) {
        Any a = parse_value();
        indices.push_back(to_element(a));
      }
      expect_rparen();
      return table_access(*found, std::move(indices), head.pos, /*bare=*/false);
    }
    return out;
  }

  const ParseContext& ctx_;
  std::vector<std::string> binders_;
  std::vector<Token> tokens_;
  std::size_t cur_ = 0;
};

}  // namespace

ParsedExpression parse_expression(const std::string& text, ExpressionKind kind,
                                  const ParseContext& ctx) {
  Parser parser(text, ctx);
  Any any = parser.parse_full();
  ParsedExpression out;
  out.kind = kind;
  switch (kind) {
    case ExpressionKind::element:
      if (!any.element) throw ParseError(any.pos, "expected an element expression");
      out.element = any.element;
      break;
    case ExpressionKind::set:
      if (!any.set) throw ParseError(any.pos, "expected a set expression");
      out.set = any.set;
      break;
    case ExpressionKind::numeric:
      if (!any.numeric) throw ParseError(any.pos, "expected a numeric expression");
      out.numeric = any.numeric;
      break;
    case ExpressionKind::condition:
      if (!any.condition) throw ParseError(any.pos, "expected a condition");
      out.condition = any.condition;
      break;
  }
  return out;
}

ElementPtr parse_element(const std::string& text, const ParseContext& ctx) {
  return parse_expression(text, ExpressionKind::element, ctx).element;
}
SetPtr parse_set(const std::string& text, const ParseContext& ctx) {
  return parse_expression(text, ExpressionKind::set, ctx).set;
}
NumericPtr parse_numeric(const std::string& text, const ParseContext& ctx) {
  return parse_expression(text, ExpressionKind::numeric, ctx).numeric;
}
ConditionPtr parse_condition(const std::string& text, const ParseContext& ctx) {
  return parse_expression(text, ExpressionKind::condition, ctx).condition;
}

}  // namespace didp
