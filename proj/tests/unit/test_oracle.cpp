#include <doctest.h>

#include "didp/benchmarks.hpp"
#include "didp/oracle.hpp"
#include "didp/solver.hpp"
#include "enumerate.hpp"
#include "helpers.hpp"

using namespace didp;
namespace bench = didp::bench;

namespace {

bench::TsptwInstance wide_tsptw() {
  bench::TsptwInstance inst;
  inst.locations = 3;
  inst.triangle = true;
  inst.travel = {{0, 5, 6}, {5, 0, 4}, {6, 4, 0}};
  inst.window_open = {0, 0, 0};
  inst.window_close = {100, 100, 100};
  return inst;
}

}  // namespace

TEST_CASE("two-customer tour value") {
  Model m = bench::build_tsptw(wide_tsptw());
  OracleResult result = oracle_solve(m);
  REQUIRE(result.value);
  CHECK(*result.value == Number(15));
  ValidationResult replay = validate_solution(m, result.transition_ids);
  CHECK(replay.valid);
  CHECK(*replay.cost == Number(15));
}

TEST_CASE("disjoint stacks need one slot") {
  bench::MospInstance inst;
  inst.customers = 2;
  inst.products = 2;
  inst.orders = {{0}, {1}};
  Model m = bench::build_mosp(inst);
  OracleResult result = oracle_solve(m);
  REQUIRE(result.value);
  CHECK(*result.value == Number(1));
}

TEST_CASE("constraint-violating root is unbounded") {
  bench::TsptwInstance inst = wide_tsptw();
  inst.window_close[1] = 3;
  Model m = bench::build_tsptw(inst);
  OracleResult result = oracle_solve(m);
  CHECK(!result.budget_exceeded);
  CHECK(!result.value);
}

TEST_CASE("budget exhaustion is reported") {
  Model m = bench::build_tsptw(bench::generate_tsptw(8, 5));
  OracleResult result = oracle_solve(m, {5});
  CHECK(result.budget_exceeded);
}

TEST_CASE("oracle equals exhaustive path enumeration") {
  std::vector<Model> models;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    models.push_back(bench::build_tsptw(bench::generate_tsptw(5, seed)));
    models.push_back(bench::build_salbp1(bench::generate_salbp1(5, 0.4, seed)));
    models.push_back(bench::build_mosp(bench::generate_mosp(4, 4, seed)));
    models.push_back(bench::build_graph_clear(bench::generate_graph_clear(4, 0.4, seed)));
  }
  for (const Model& m : models) {
    testing::EnumerationBudget budget;
    std::optional<Number> expected = testing::enumerate_paths(m, m.target, budget);
    REQUIRE(!budget.exhausted);
    OracleResult actual = oracle_solve(m);
    REQUIRE(!actual.budget_exceeded);
    CHECK(actual.value.has_value() == expected.has_value());
    if (expected) CHECK(*actual.value == *expected);
  }
}

TEST_CASE("self-loop states are cycle-pruned, not diverged") {
  bench::SalbpInstance inst;
  inst.tasks = 1;
  inst.cycle_time = 4;
  inst.time = {9};  // never fits a station
  inst.predecessors = {{}};
  Model m = bench::build_salbp1(inst);
  OracleResult result = oracle_solve(m);
  CHECK(!result.budget_exceeded);
  CHECK(!result.value);
  CHECK(solve(m).status == SolveStatus::infeasible);
}

TEST_CASE("oracle sequences replay under the max algebra") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (Model m : {bench::build_mosp(bench::generate_mosp(5, 5, seed)),
                    bench::build_graph_clear(bench::generate_graph_clear(5, 0.4, seed))}) {
      OracleResult result = oracle_solve(m);
      REQUIRE(result.value);
      ValidationResult replay = validate_solution(m, result.transition_ids);
      REQUIRE(replay.valid);
      CHECK(*replay.cost == *result.value);
    }
  }
}

TEST_CASE("memoized and collected values agree with fresh roots") {
  Model m = bench::build_graph_clear(bench::generate_graph_clear(5, 0.5, 9));
  std::vector<std::pair<State, Number>> values;
  OracleOptions options;
  options.collect_values = &values;
  OracleResult root = oracle_solve(m, {}, options);
  REQUIRE(root.value);
  CHECK(values.size() > 4);
  int checked = 0;
  for (const auto& [state, value] : values) {
    if (checked >= 8) break;
    OracleOptions from_state;
    from_state.root = &state;
    OracleResult again = oracle_solve(m, {}, from_state);
    REQUIRE(again.value);
    CHECK(*again.value == value);
    ++checked;
  }
}

TEST_CASE("maximization models run through the oracle only") {
  bench::TsptwInstance inst;
  inst.locations = 3;
  inst.triangle = true;
  inst.travel = {{0, 2, 9}, {5, 0, 3}, {9, 7, 0}};
  inst.window_open = {0, 0, 0};
  inst.window_close = {999, 999, 999};
  Model m = bench::build_tsptw(inst);
  REQUIRE(oracle_solve(m).value == Number(14));  // 0-1-2-0
  m.reduce = Reduce::max;
  OracleResult longest = oracle_solve(m);
  REQUIRE(longest.value);
  CHECK(*longest.value == Number(21));  // 0-2-1-0
  CHECK(solve(m).status == SolveStatus::unsupported_cost_form);
}

TEST_CASE("replay rejects tampered sequences") {
  Model m = bench::build_tsptw(wide_tsptw());
  Solution solution = solve(m);
  REQUIRE(solution.status == SolveStatus::optimal);

  // Visiting a customer not in U violates its membership precondition.
  std::vector<int> tampered = solution.transition_ids;
  tampered.insert(tampered.begin(), tampered[0]);
  ValidationResult bad = validate_solution(m, tampered);
  CHECK(!bad.valid);
  CHECK(bad.step == 1);
  CHECK(bad.reason.find("precondition") != std::string::npos);

  // Stopping early leaves a non-base state.
  std::vector<int> truncated(solution.transition_ids.begin(),
                             solution.transition_ids.end() - 1);
  ValidationResult early = validate_solution(m, truncated);
  CHECK(!early.valid);
  CHECK(early.reason.find("base") != std::string::npos);

  ValidationResult empty = validate_solution(m, {});
  CHECK(!empty.valid);
  CHECK(empty.step == 0);
  CHECK(empty.reason == "not a base state");
}

TEST_CASE("replay enforces the forced-transition rule") {
  bench::BinPackingInstance inst;
  inst.items = 2;
  inst.capacity = 10;
  inst.size = {6, 5};
  Model m = bench::build_bin_packing(inst);
  // "open 1" is applicable by its own preconditions at the start, but the
  // first-defined forced transition is "open 0".
  int open1 = -1;
  for (std::size_t k = 0; k < m.transitions.size(); ++k) {
    if (m.transitions[k].name == "open 1") open1 = static_cast<int>(k);
  }
  REQUIRE(open1 >= 0);
  ValidationResult result = validate_solution(m, {open1});
  CHECK(!result.valid);
  CHECK(result.step == 0);
  CHECK(result.reason.find("forced") != std::string::npos);
}

TEST_CASE("named replay resolves transition names") {
  Model m = bench::build_tsptw(wide_tsptw());
  ValidationResult ok = validate_solution_named(m, {"visit 1", "visit 2", "return"});
  CHECK(ok.valid);
  CHECK(*ok.cost == Number(15));
  ValidationResult unknown = validate_solution_named(m, {"visit 9"});
  CHECK(!unknown.valid);
  CHECK(unknown.reason.find("unknown transition") != std::string::npos);
}
