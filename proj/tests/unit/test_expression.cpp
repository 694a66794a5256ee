#include <doctest.h>

#include "didp/expression.hpp"
#include "didp/parser.hpp"
#include "helpers.hpp"

using namespace didp;
using namespace didp::expr;

TEST_CASE("sum reduction over one set position") {
  Model m = testing::tiny_model();
  State s = testing::state_of(m, {0, 2}, 0, Number(0));
  // (sum tv U) with tv = [2, 3, 5] and U = {0, 2}
  auto e = sum(0, {set_var(0)});
  CHECK(eval_numeric(*e, s, m.tables) == Number(7));
}

TEST_CASE("sum reduction equals the fold of scalar accesses") {
  Model m = testing::tiny_model();
  std::uint64_t rng = 99;
  for (int round = 0; round < 100; ++round) {
    State s = m.blank_state();
    for (int v = 0; v < 3; ++v) {
      if (testing::rand_range(rng, 0, 1)) s.sets[0].insert(v);
    }
    auto reduced = sum(0, {set_var(0)});
    Number expected(0);
    s.sets[0].for_each([&](int v) {
      auto access = num_table(0, {elem_lit(v)});
      expected = expected + eval_numeric(*access, s, m.tables);
    });
    CHECK(eval_numeric(*reduced, s, m.tables) == expected);
  }
}

TEST_CASE("two-position sum is the double sum over the product") {
  Model m = testing::tiny_model();
  State s = testing::state_of(m, {0, 1}, 0, Number(0));
  // rows over U = {0,1}, columns over ~U = {2}: m[0][2] + m[1][2]
  auto e = sum(1, {set_var(0), set_complement(set_var(0))});
  CHECK(eval_numeric(*e, s, m.tables) == Number(2 + 12));
}

TEST_CASE("cardinality over set identities") {
  Model m = testing::tiny_model();
  State s = m.blank_state();  // U = {}
  // |U union (ns[0] minus U)| with ns[0] = {0, 1}
  auto e = card(unite(set_var(0), diff(set_table(0, {elem_lit(0)}), set_var(0))));
  CHECK(eval_numeric(*e, s, m.tables) == Number(2));
}

TEST_CASE("time-window violation condition") {
  // Exists j in U with t + travel[i][j] > deadline[j], evaluated as the
  // negation of the universal form on U = {1}, i = 0, t = 0 with
  // travel[0][1] = 5, deadline[1] = 3.
  Model m = testing::tiny_model();
  NumericTable travel;
  travel.name = "travel";
  travel.dims = {3, 3};
  travel.values.assign(9, Number(0));
  travel.values[0 * 3 + 1] = Number(5);
  int travel_id = m.tables.add_numeric(std::move(travel));
  NumericTable deadline;
  deadline.name = "deadline";
  deadline.dims = {3};
  deadline.values = {Number(100), Number(3), Number(100)};
  int deadline_id = m.tables.add_numeric(std::move(deadline));

  auto within = forall(0, set_var(0),
                       cmp(Comparison::le,
                           add(num_var(0), num_table(travel_id, {elem_var(0), elem_param(0)})),
                           num_table(deadline_id, {elem_param(0)})));
  State s = testing::state_of(m, {1}, 0, Number(0));
  CHECK(!eval_condition(*within, s, m.tables));
  CHECK(eval_condition(*negate(within), s, m.tables));

  // Wide deadline: the universal condition holds.
  State relaxed = testing::state_of(m, {2}, 0, Number(0));
  CHECK(eval_condition(*within, relaxed, m.tables));
}

TEST_CASE("if-then-else with a tautological condition equals its then branch") {
  Model m = testing::tiny_model();
  std::uint64_t rng = 7;
  for (int round = 0; round < 50; ++round) {
    State s = testing::state_of(m, {}, testing::rand_range(rng, 0, 2),
                                Number(testing::rand_range(rng, -20, 20)));
    auto tautology = disj(cmp(Comparison::le, num_var(0), num_lit(Number(0))),
                          cmp(Comparison::gt, num_var(0), num_lit(Number(0))));
    auto branch = add(num_var(0), num_lit(Number(3)));
    auto ite_expr = ite(tautology, branch, num_lit(Number(-999)));
    CHECK(eval_numeric(*ite_expr, s, m.tables) == eval_numeric(*branch, s, m.tables));
  }
}

TEST_CASE("evaluation is pure") {
  Model m = testing::tiny_model();
  State s = testing::state_of(m, {1, 2}, 2, Number::rational(7, 2));
  auto e = nmax(add(num_var(0), num_table(0, {elem_var(0)})), card(set_var(0)));
  Number first = eval_numeric(*e, s, m.tables);
  for (int k = 0; k < 10; ++k) CHECK(eval_numeric(*e, s, m.tables) == first);
}

TEST_CASE("element arithmetic and bounds") {
  Model m = testing::tiny_model();
  State s = testing::state_of(m, {}, 2, Number(0));
  CHECK(eval_element(*expr::add(elem_var(0), elem_lit(1)), s, m.tables) == 3);
  // Out-of-range computed table index raises.
  auto bad = num_table(0, {expr::add(elem_var(0), elem_lit(1))});
  CHECK_THROWS_AS(eval_numeric(*bad, s, m.tables), EvalError);
}

TEST_CASE("cost placeholder outside a cost expression") {
  Model m = testing::tiny_model();
  State s = m.blank_state();
  CHECK_THROWS_AS(eval_numeric(*cost(), s, m.tables), EvalError);
  Number value(42);
  EvalContext ctx{s, m.tables, &value};
  CHECK(eval_numeric(*cost(), ctx) == value);
}

TEST_CASE("division by zero propagates") {
  Model m = testing::tiny_model();
  State s = m.blank_state();
  auto e = div(num_lit(Number(1)), num_var(0));
  CHECK_THROWS_AS(eval_numeric(*e, s, m.tables), EvalError);
}

TEST_CASE("set expression evaluation") {
  Model m = testing::tiny_model();
  State s = testing::state_of(m, {0}, 0, Number(0));
  CHECK(eval_set(*set_add(elem_lit(2), set_var(0)), s, m.tables).members() ==
        std::vector<int>{0, 2});
  CHECK(eval_set(*set_remove(elem_lit(1), set_var(0)), s, m.tables).members() ==
        std::vector<int>{0});
  CHECK(eval_set(*set_complement(set_var(0)), s, m.tables).members() ==
        std::vector<int>{1, 2});
  CHECK_THROWS_AS(eval_set(*set_add(elem_lit(5), set_var(0)), s, m.tables), EvalError);
}
