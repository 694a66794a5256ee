#include <doctest.h>

#include <thread>

#include "didp/benchmarks.hpp"
#include "didp/oracle.hpp"
#include "didp/solver.hpp"
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

bench::GraphClearInstance two_node_graph() {
  bench::GraphClearInstance inst;
  inst.nodes = 2;
  inst.node_weight = {1, 1};
  inst.edge_weight = {{0, 1}, {1, 0}};
  return inst;
}

}  // namespace

TEST_CASE("cost form classification") {
  CHECK(classify_cost_form(bench::build_tsptw(wide_tsptw())).algebra->op == CombineOp::plus);
  CHECK(classify_cost_form(bench::build_graph_clear(two_node_graph())).algebra->op ==
        CombineOp::max);

  Model mixed = bench::build_tsptw(wide_tsptw());
  mixed.transitions[0].cost =
      expr::nmax(expr::num_lit(Number(1)), expr::cost());
  CHECK(!classify_cost_form(mixed).supported());

  Model maximize = bench::build_tsptw(wide_tsptw());
  maximize.reduce = Reduce::max;
  CHECK(!classify_cost_form(maximize).supported());
  CHECK(solve(maximize).status == SolveStatus::unsupported_cost_form);

  Model bare = bench::build_tsptw(wide_tsptw());
  bare.transitions[0].cost = expr::cost();
  CHECK(!classify_cost_form(bare).supported());

  Model weight_with_cost = bench::build_tsptw(wide_tsptw());
  weight_with_cost.transitions[0].cost = expr::add(expr::cost(), expr::cost());
  CHECK(!classify_cost_form(weight_with_cost).supported());
}

TEST_CASE("two-customer tour solves to 15") {
  Model m = bench::build_tsptw(wide_tsptw());
  Solution solution = solve(m);
  REQUIRE(solution.status == SolveStatus::optimal);
  CHECK(*solution.cost == Number(15));
  CHECK(*solution.best_bound == Number(15));
  ValidationResult replay = validate_solution(m, solution.transition_ids);
  CHECK(replay.valid);
  CHECK(*replay.cost == Number(15));
}

TEST_CASE("max algebra on the two-node sweep") {
  Model m = bench::build_graph_clear(two_node_graph());
  Solution solution = solve(m);
  REQUIRE(solution.status == SolveStatus::optimal);
  CHECK(*solution.cost == Number(2));
}

TEST_CASE("unreachable deadline is infeasible") {
  bench::TsptwInstance inst = wide_tsptw();
  inst.window_close[1] = 3;
  Model m = bench::build_tsptw(inst);
  Solution solution = solve(m);
  CHECK(solution.status == SolveStatus::infeasible);
  CHECK(!solution.cost);
}

TEST_CASE("base target costs the identity") {
  bench::TsptwInstance inst;
  inst.locations = 1;
  inst.triangle = true;
  inst.travel = {{0}};
  inst.window_open = {0};
  inst.window_close = {10};
  Model m = bench::build_tsptw(inst);
  Solution solution = solve(m);
  REQUIRE(solution.status == SolveStatus::optimal);
  CHECK(*solution.cost == Number(0));
  CHECK(solution.transition_ids.empty());
}

TEST_CASE("deterministic across repeated runs") {
  Model m = bench::build_salbp1([] {
    bench::SalbpInstance inst;
    inst.tasks = 6;
    inst.cycle_time = 10;
    inst.time = {6, 5, 5, 3, 7, 2};
    inst.predecessors = {{}, {0}, {}, {1}, {}, {2}};
    return inst;
  }());
  Solution first = solve(m);
  for (int round = 0; round < 3; ++round) {
    Solution again = solve(m);
    CHECK(again.status == first.status);
    CHECK(*again.cost == *first.cost);
    CHECK(again.transition_ids == first.transition_ids);
    CHECK(again.stats.expanded == first.stats.expanded);
    CHECK(again.stats.generated == first.stats.generated);
  }
}

TEST_CASE("generated-state limits degrade gracefully and monotonically") {
  Model m = bench::build_tsptw(bench::generate_tsptw(8, 11));
  Solution full = solve(m);
  REQUIRE(full.status == SolveStatus::optimal);

  std::optional<Number> previous;
  for (std::uint64_t budget : {10ull, 100ull, 1000ull, 100000ull}) {
    Solution limited = solve(m, {1800.0, budget});
    if (limited.status == SolveStatus::memory_limit) {
      REQUIRE(limited.best_bound);
      CHECK(*limited.best_bound <= *full.cost);
      if (previous) CHECK(*previous <= *limited.best_bound);
      previous = limited.best_bound;
    } else {
      CHECK(limited.status == SolveStatus::optimal);
      CHECK(*limited.cost == *full.cost);
    }
  }
}

TEST_CASE("registry soundness: the reported path reproduces g") {
  Model m = bench::build_cvrp(bench::generate_cvrp(5, 2, 3));
  Solution solution = solve(m);
  REQUIRE(solution.status == SolveStatus::optimal);
  State s = m.target;
  Number g(0);
  for (int t_id : solution.transition_ids) {
    EvalContext ctx{s, m.tables};
    Number weight =
        eval_numeric(*classify_cost_form(m).edge_weights[t_id], ctx);
    g = g + weight;
    s = apply(m, m.transitions[t_id], s);
  }
  CHECK(g == *solution.cost);
  CHECK(is_base(m, s));
}

TEST_CASE("dominance pruning changes work, not answers") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
    Model m = bench::build_tsptw(bench::generate_tsptw(7, seed));
    Solution with = solve(m);
    SolveOptions options;
    options.use_dominance = false;
    Solution without = solve(erase_preferences(m), {}, options);
    REQUIRE(with.status == without.status);
    if (with.status == SolveStatus::optimal) {
      CHECK(*with.cost == *without.cost);
      CHECK(with.stats.expanded <= without.stats.expanded);
    }
  }
}

TEST_CASE("negative edge weights are rejected at evaluation time") {
  bench::TsptwInstance inst = wide_tsptw();
  Model m = bench::build_tsptw(inst);
  m.transitions[1].cost = expr::add(expr::num_lit(Number(-1)), expr::cost());
  CHECK_THROWS_AS(solve(m), NegativeEdgeWeight);
}

TEST_CASE("dominance observer sees strict dominance pairs") {
  // Customers 1-3 cluster near the depot with asymmetric travel times, so
  // permuted prefixes reach the same <U, i> at different times; customer 4
  // is far away, which keeps the search alive until those duplicates meet.
  bench::TsptwInstance inst;
  inst.locations = 5;
  inst.triangle = true;
  inst.travel = {{0, 1, 2, 4, 50},
                 {1, 0, 1, 2, 50},
                 {2, 2, 0, 1, 50},
                 {4, 2, 3, 0, 50},
                 {50, 50, 50, 50, 0}};
  inst.window_open = {0, 0, 0, 0, 0};
  inst.window_close = {999, 999, 999, 999, 999};
  Model m = bench::build_tsptw(inst);
  int events = 0;
  SolveOptions options;
  options.dominance_observer = [&](const State& dominating, const State& dominated) {
    ++events;
    auto rel = dominance(m, dominating, dominated);
    CHECK(rel == DominanceOutcome::left_dominates);
  };
  solve(m, {}, options);
  CHECK(events > 0);
}

TEST_CASE("an expired time limit still reports a bound") {
  Model m = bench::build_tsptw(bench::generate_tsptw(8, 21));
  Solution solution = solve(m, {1e-9, 10'000'000});
  REQUIRE(solution.status == SolveStatus::time_limit);
  REQUIRE(solution.best_bound);
  Solution full = solve(m);
  REQUIRE(full.status == SolveStatus::optimal);
  CHECK(*solution.best_bound <= *full.cost);
}

TEST_CASE("blind search is flagged") {
  Model m = bench::build_tsptw(wide_tsptw());
  m.dual_bounds.clear();
  Solution solution = solve(m);
  CHECK(solution.stats.blind);
  CHECK(*solution.cost == Number(15));
}

TEST_CASE("concurrent solves share one immutable model") {
  Model m = bench::build_tsptw(bench::generate_tsptw(7, 77));
  Solution expected = solve(m);
  REQUIRE(expected.status == SolveStatus::optimal);
  std::vector<Solution> results(8);
  {
    std::vector<std::thread> threads;
    for (auto& slot : results) {
      threads.emplace_back([&m, &slot] { slot = solve(m); });
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& result : results) {
    CHECK(result.status == expected.status);
    CHECK(*result.cost == *expected.cost);
    CHECK(result.transition_ids == expected.transition_ids);
    CHECK(result.stats.expanded == expected.stats.expanded);
  }
}
