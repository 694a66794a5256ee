#include <doctest.h>

#include "didp/parser.hpp"
#include "didp/printer.hpp"
#include "helpers.hpp"

using namespace didp;

namespace {

// Random AST generator for the round-trip property, over the tiny model's
// scope (tables tv/1 numeric, m/2 numeric, ns/1 set).
struct AstGen {
  std::uint64_t rng;
  int max_depth;

  std::int64_t pick(std::int64_t n) { return testing::rand_range(rng, 0, n - 1); }

  ElementPtr element(int depth, int slots) {
    if (depth >= max_depth) {
      if (slots > 0 && pick(3) == 0) return expr::elem_param(static_cast<int>(pick(slots)));
      return pick(2) ? expr::elem_lit(pick(3)) : expr::elem_var(0);
    }
    switch (pick(3)) {
      case 0:
        return expr::ebin(static_cast<ElementBinaryOp>(pick(4)), element(depth + 1, slots),
                          element(depth + 1, slots));
      case 1:
        return element(max_depth, slots);
      default:
        return expr::elem_lit(pick(3));
    }
  }

  SetPtr set(int depth, int slots) {
    if (depth >= max_depth) {
      if (pick(2)) return expr::set_var(0);
      return expr::set_table(0, {element(max_depth, slots)});
    }
    switch (pick(5)) {
      case 0:
        return expr::sbin(static_cast<SetBinaryOp>(pick(3)), set(depth + 1, slots),
                          set(depth + 1, slots));
      case 1:
        return expr::set_add(element(depth + 1, slots), set(depth + 1, slots));
      case 2:
        return expr::set_remove(element(depth + 1, slots), set(depth + 1, slots));
      case 3:
        return expr::set_complement(set(depth + 1, slots));
      default: {
        IndexSet value(3);
        for (int v = 0; v < 3; ++v) {
          if (pick(2)) value.insert(v);
        }
        return expr::set_lit(std::move(value), 0);
      }
    }
  }

  NumericPtr numeric(int depth, int slots) {
    if (depth >= max_depth) {
      switch (pick(4)) {
        case 0: return expr::num_lit(Number(pick(20) - 5));
        case 1: return expr::num_lit(Number::rational(pick(7) + 1, pick(6) + 2));
        case 2: return expr::num_var(0);
        default: return expr::num_table(0, {element(max_depth, slots)});
      }
    }
    switch (pick(6)) {
      case 0:
        return expr::nbin(static_cast<NumericBinaryOp>(pick(6)), numeric(depth + 1, slots),
                          numeric(depth + 1, slots));
      case 1:
        return pick(2) ? expr::ceil(numeric(depth + 1, slots))
                       : expr::floor(numeric(depth + 1, slots));
      case 2:
        return expr::card(set(depth + 1, slots));
      case 3:
        return pick(2) ? expr::sum(0, {set(depth + 1, slots)})
                       : expr::sum(1, {element(depth + 1, slots), set(depth + 1, slots)});
      case 4:
        return expr::ite(condition(depth + 1, slots), numeric(depth + 1, slots),
                         numeric(depth + 1, slots));
      default:
        return expr::num_table(1, {element(depth + 1, slots), element(depth + 1, slots)});
    }
  }

  ConditionPtr condition(int depth, int slots) {
    if (depth >= max_depth) {
      return expr::bool_lit(pick(2) == 0);
    }
    switch (pick(8)) {
      case 0:
        // Anchor one side so the comparison is textually element-typed;
        // literal-only comparisons canonically read as numeric.
        return expr::cmp(static_cast<Comparison>(pick(6)), expr::elem_var(0),
                         element(depth + 1, slots));
      case 1:
        return expr::cmp(static_cast<Comparison>(pick(6)), numeric(depth + 1, slots),
                         numeric(depth + 1, slots));
      case 2:
        return expr::cmp(pick(2) ? Comparison::eq : Comparison::ne, set(depth + 1, slots),
                         set(depth + 1, slots));
      case 3:
        return expr::subset_of(set(depth + 1, slots), set(depth + 1, slots));
      case 4:
        return expr::is_in(element(depth + 1, slots), set(depth + 1, slots));
      case 5:
        return expr::negate(condition(depth + 1, slots));
      case 6:
        return pick(2) ? expr::conj(condition(depth + 1, slots), condition(depth + 1, slots))
                       : expr::disj(condition(depth + 1, slots), condition(depth + 1, slots));
      default:
        return expr::forall(slots, set(depth + 1, slots), condition(depth + 1, slots + 1));
    }
  }
};

}  // namespace

TEST_CASE("table access with variable and parameter indices") {
  Model m = testing::tiny_model();
  ParseContext ctx = ParseContext::of(m);
  ctx.ground_params.emplace_back("j", 2);
  NumericPtr e = parse_numeric("(m i j)", ctx);
  State s = testing::state_of(m, {}, 1, Number(0));
  CHECK(eval_numeric(*e, s, m.tables) == Number(12));  // m[1][2]
}

TEST_CASE("if-then-else with a fractional threshold") {
  Model m = testing::tiny_model();
  // Scalar constant "cap" playing the cycle-time role.
  NumericTable cap;
  cap.name = "cap";
  cap.values = {Number(10)};
  m.tables.add_numeric(std::move(cap));
  ParseContext ctx = ParseContext::of(m);
  NumericPtr e = parse_numeric("(if (>= t (/ cap 2.0)) 1 0)", ctx);
  CHECK(eval_numeric(*e, testing::state_of(m, {}, 0, Number(5)), m.tables) == Number(1));
  CHECK(eval_numeric(*e, testing::state_of(m, {}, 0, Number::rational(9, 2)), m.tables) ==
        Number(0));
}

TEST_CASE("additive identity behaves like the variable") {
  Model m = testing::tiny_model();
  ParseContext ctx = ParseContext::of(m);
  NumericPtr e = parse_numeric("(+ 0 t)", ctx);
  NumericPtr plain = parse_numeric("t", ctx);
  for (int v = -3; v <= 3; ++v) {
    State s = testing::state_of(m, {}, 0, Number(v));
    CHECK(eval_numeric(*e, s, m.tables) == eval_numeric(*plain, s, m.tables));
  }
}

TEST_CASE("parse errors carry positions and reasons") {
  Model m = testing::tiny_model();
  ParseContext ctx = ParseContext::of(m);
  CHECK_THROWS_AS(parse_numeric("(+ t unknown)", ctx), ParseError);
  CHECK_THROWS_AS(parse_numeric("(tv 0 1)", ctx), ParseError);     // arity mismatch
  CHECK_THROWS_AS(parse_numeric("(card t)", ctx), ParseError);     // kind mismatch
  CHECK_THROWS_AS(parse_numeric("(+ t 1", ctx), ParseError);       // missing paren
  CHECK_THROWS_AS(parse_numeric("(+ t 1) )", ctx), ParseError);    // trailing input
  CHECK_THROWS_AS(parse_condition("(<= U ns)", ctx), ParseError);  // sets are not ordered
  CHECK_THROWS_AS(parse_condition("(= i t)", ctx), ParseError);    // element vs numeric
  try {
    parse_numeric("(+ t unknown)", ctx);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
    CHECK(e.reason.find("unknown") != std::string::npos);
  }
}

TEST_CASE("shorthand complement") {
  Model m = testing::tiny_model();
  ParseContext ctx = ParseContext::of(m);
  SetPtr a = parse_set("~U", ctx);
  SetPtr b = parse_set("(complement U)", ctx);
  CHECK(equal(*a, *b));
  SetPtr nested = parse_set("~(union U (ns 0))", ctx);
  State s = testing::state_of(m, {2}, 0, Number(0));
  CHECK(eval_set(*nested, s, m.tables).empty());
}

TEST_CASE("mixed element and numeric comparisons resolve by committed side") {
  Model m = testing::tiny_model();
  ParseContext ctx = ParseContext::of(m);
  // i is an element variable: integer literals coerce to elements.
  ConditionPtr elem_side = parse_condition("(>= (+ i 1) 2)", ctx);
  CHECK(std::holds_alternative<Condition::ElementComparison>(elem_side->node));
  ConditionPtr num_side = parse_condition("(>= (+ t 1) 2)", ctx);
  CHECK(std::holds_alternative<Condition::NumericComparison>(num_side->node));
}

TEST_CASE("print then parse is the identity on random ASTs") {
  Model m = testing::tiny_model();
  ParseContext pctx = ParseContext::of(m);
  PrintContext ctx = PrintContext::of(m);
  AstGen gen{2024, 4};
  for (int round = 0; round < 300; ++round) {
    switch (round % 4) {
      case 0: {
        ElementPtr e = gen.element(0, 0);
        CHECK(equal(*parse_element(print(*e, ctx), pctx), *e));
        break;
      }
      case 1: {
        SetPtr e = gen.set(0, 0);
        CHECK(equal(*parse_set(print(*e, ctx), pctx), *e));
        break;
      }
      case 2: {
        NumericPtr e = gen.numeric(0, 0);
        CHECK(equal(*parse_numeric(print(*e, ctx), pctx), *e));
        break;
      }
      default: {
        ConditionPtr e = gen.condition(0, 0);
        CHECK(equal(*parse_condition(print(*e, ctx), pctx), *e));
        break;
      }
    }
  }
}

TEST_CASE("cost placeholder round-trips") {
  Model m = testing::tiny_model();
  ParseContext pctx = ParseContext::of(m);
  NumericPtr e = parse_numeric("(+ (tv i) cost)", pctx);
  CHECK(contains_cost_placeholder(*e));
  CHECK(print(*e, PrintContext::of(m)) == "(+ (tv i) cost)");
}

TEST_CASE("fraction literals parse exactly") {
  Model m = testing::tiny_model();
  ParseContext ctx = ParseContext::of(m);
  NumericPtr e = parse_numeric("1/3", ctx);
  const auto* lit = std::get_if<NumericExpr::Literal>(&e->node);
  REQUIRE(lit != nullptr);
  CHECK(lit->value == Number::rational(1, 3));
  NumericPtr dec = parse_numeric("2.5", ctx);
  CHECK(std::get<NumericExpr::Literal>(dec->node).value == Number::rational(5, 2));
}
