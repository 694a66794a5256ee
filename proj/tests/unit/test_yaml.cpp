#include <doctest.h>

#include <fstream>
#include <sstream>

#include "didp/benchmarks.hpp"
#include "didp/oracle.hpp"
#include "didp/solver.hpp"
#include "didp/yaml_frontend.hpp"

using namespace didp;
namespace bench = didp::bench;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("the tour fixture loads and matches the builder") {
  DomainDef domain = load_domain(slurp(std::string(DIDP_FIXTURE_DIR) + "/tsptw2-domain.yaml"));
  Model from_yaml =
      load_problem(domain, slurp(std::string(DIDP_FIXTURE_DIR) + "/tsptw2-problem.yaml"));

  bench::TsptwInstance inst;
  inst.locations = 3;
  inst.triangle = true;
  inst.travel = {{0, 5, 6}, {5, 0, 4}, {6, 4, 0}};
  inst.window_open = {0, 0, 0};
  inst.window_close = {100, 100, 100};
  Model from_builder = bench::build_tsptw(inst);

  Solution a = solve(from_yaml);
  Solution b = solve(from_builder);
  REQUIRE(a.status == SolveStatus::optimal);
  CHECK(*a.cost == *b.cost);
  CHECK(a.stats.expanded == b.stats.expanded);
  CHECK(a.stats.generated == b.stats.generated);
  CHECK(transition_names(from_yaml, a.transition_ids) ==
        transition_names(from_builder, b.transition_ids));
}

TEST_CASE("a leaner tour domain relying on the state constraint agrees") {
  // With metric travel times the deadline precondition on visits is implied
  // by the state constraint, so a domain may drop it (and the detour-free
  // table) without changing any result.
  const char* lean_domain = R"yaml(objects: [customers]
state_variables:
  - {name: U, type: set, object: customers}
  - {name: i, type: element, object: customers}
  - {name: t, type: numeric, preference: less}
tables:
  - {name: a, type: numeric, args: [customers]}
  - {name: b, type: numeric, args: [customers]}
  - {name: c, type: numeric, args: [customers, customers]}
reduce: min
cost_type: integer
constraints:
  - forall: [{name: j, object: U}]
    condition: "(<= (+ t (c i j)) (b j))"
base_cases:
  - ["(= (card U) 0)", "(= i 0)"]
transitions:
  - name: visit
    parameters: [{name: j, object: U}]
    effects:
      U: "(remove j U)"
      i: "j"
      t: "(max (+ t (c i j)) (a j))"
    cost: "(+ (c i j) cost)"
  - name: return
    preconditions: ["(= (card U) 0)", "(!= i 0)"]
    effects:
      i: "0"
      t: "(+ t (c i 0))"
    cost: "(+ (c i 0) cost)"
dual_bounds: ["0"]
)yaml";
  const char* problem = R"yaml(object_numbers:
  customers: 4
target:
  U: [1, 2, 3]
  i: 0
  t: 0
table_values:
  a: [0, 3, 0, 2]
  b: [100, 40, 35, 60]
  c: [[0, 5, 6, 4], [5, 0, 4, 7], [6, 4, 0, 3], [4, 7, 3, 0]]
)yaml";
  Model lean = load_problem(load_domain(lean_domain), problem);
  Solution a = solve(lean);

  bench::TsptwInstance inst;
  inst.locations = 4;
  inst.triangle = true;
  inst.travel = {{0, 5, 6, 4}, {5, 0, 4, 7}, {6, 4, 0, 3}, {4, 7, 3, 0}};
  inst.window_open = {0, 3, 0, 2};
  inst.window_close = {100, 40, 35, 60};
  Solution b = solve(bench::build_tsptw(inst));

  REQUIRE(a.status == SolveStatus::optimal);
  REQUIRE(b.status == SolveStatus::optimal);
  CHECK(*a.cost == *b.cost);
  OracleResult reference = oracle_solve(lean);
  CHECK(*reference.value == *a.cost);
}

TEST_CASE("missing required keys are parse errors") {
  CHECK_THROWS_AS(load_domain("objects: [x]\ncost_type: integer\n"), ParseError);
  CHECK_THROWS_AS(load_domain("objects: [x]\nreduce: min\n"), ParseError);
  CHECK_THROWS_AS(load_domain("reduce: min\ncost_type: integer\nbogus_key: 1\n"), ParseError);
  CHECK_THROWS_AS(load_domain("reduce: sideways\ncost_type: integer\n"), ParseError);
}

TEST_CASE("schema violations carry key paths") {
  try {
    load_domain("reduce: min\ncost_type: integer\nstate_variables:\n  - {name: x, type: blob}\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("state_variables[0]") != std::string::npos);
  }
}

TEST_CASE("parameterized transitions expand with membership preconditions") {
  const char* domain_text = R"yaml(objects: [items]
state_variables:
  - {name: S, type: set, object: items}
reduce: min
cost_type: integer
base_cases:
  - ["(= (card S) 0)"]
transitions:
  - name: take
    parameters: [{name: x, object: S}]
    effects:
      S: "(remove x S)"
    cost: "(+ 1 cost)"
)yaml";
  DomainDef domain = load_domain(domain_text);
  Model m = load_problem(domain, "object_numbers:\n  items: 3\ntarget:\n  S: [0, 1, 2]\n");
  REQUIRE(m.transitions.size() == 3);
  CHECK(m.transitions[0].name == "take 0");
  CHECK(m.transitions[2].name == "take 2");
  // Implicit membership precondition: from {1}, only "take 1" applies.
  State s = m.blank_state();
  s.sets[0].insert(1);
  auto applicable = applicable_transitions(m, s);
  REQUIRE(applicable.size() == 1);
  CHECK(m.transitions[applicable[0]].name == "take 1");
  CHECK(*solve(m).cost == Number(3));

  // Zero objects: the template grounds to nothing and the base case holds.
  Model empty = load_problem(domain, "object_numbers:\n  items: 0\ntarget:\n  S: []\n");
  CHECK(empty.transitions.empty());
  CHECK(*solve(empty).cost == Number(0));
}

TEST_CASE("load-time forall over an object type expands to a conjunction") {
  const char* domain_text = R"yaml(objects: [items]
state_variables:
  - {name: S, type: set, object: items}
tables:
  - {name: w, type: numeric, args: [items]}
reduce: min
cost_type: integer
constraints:
  - forall: [{name: x, object: items}]
    condition: "(>= (w x) 0)"
base_cases:
  - ["(= (card S) 0)"]
transitions:
  - name: take
    parameters: [{name: x, object: S}]
    effects:
      S: "(remove x S)"
    cost: "(+ (w x) cost)"
)yaml";
  DomainDef domain = load_domain(domain_text);
  Model m = load_problem(
      domain, "object_numbers:\n  items: 3\ntarget:\n  S: [0, 1]\ntable_values:\n  w: [4, 2, 9]\n");
  CHECK(m.state_constraints.size() == 3);  // one ground conjunct per object
  CHECK(*solve(m).cost == Number(6));

  Model none = load_problem(domain,
                            "object_numbers:\n  items: 0\ntarget:\n  S: []\ntable_values:\n"
                            "  w: {default: 0}\n");
  CHECK(none.state_constraints.empty());  // empty conjunction is vacuously true
  CHECK(check_constraints(none, none.target));
}

TEST_CASE("unknown parameter universes are grounding errors") {
  const char* domain_text = R"yaml(objects: [items]
state_variables:
  - {name: S, type: set, object: items}
reduce: min
cost_type: integer
base_cases:
  - ["(= (card S) 0)"]
transitions:
  - name: take
    parameters: [{name: x, object: gadgets}]
    effects:
      S: "(remove x S)"
    cost: "(+ 1 cost)"
)yaml";
  DomainDef domain = load_domain(domain_text);
  CHECK_THROWS_AS(load_problem(domain, "object_numbers:\n  items: 2\ntarget:\n  S: [0]\n"),
                  GroundingError);
}

TEST_CASE("missing object counts and table values are grounding errors") {
  const char* domain_text = R"yaml(objects: [items]
state_variables:
  - {name: S, type: set, object: items}
tables:
  - {name: w, type: numeric, args: [items]}
reduce: min
cost_type: integer
base_cases:
  - ["(= (card S) 0)"]
)yaml";
  DomainDef domain = load_domain(domain_text);
  CHECK_THROWS_AS(load_problem(domain, "target:\n  S: []\n"), GroundingError);
  CHECK_THROWS_AS(
      load_problem(domain, "object_numbers:\n  items: 2\ntarget:\n  S: []\n"),
      GroundingError);
  CHECK_THROWS_AS(
      load_problem(domain,
                   "object_numbers:\n  items: 2\ntarget:\n  S: []\ntable_values:\n"
                   "  w: {entries: [{index: [0], value: 1}]}\n"),
      GroundingError);
  // With a default every entry is covered.
  Model ok = load_problem(domain,
                          "object_numbers:\n  items: 2\ntarget:\n  S: []\ntable_values:\n"
                          "  w: {default: 7, entries: [{index: [0], value: 1}]}\n");
  auto found = ok.tables.find("w");
  CHECK(ok.tables.numeric[found->second].at({0}) == Number(1));
  CHECK(ok.tables.numeric[found->second].at({1}) == Number(7));
}

TEST_CASE("wrong table shapes are parse errors") {
  const char* domain_text = R"yaml(objects: [items]
state_variables:
  - {name: S, type: set, object: items}
tables:
  - {name: w, type: numeric, args: [items, items]}
reduce: min
cost_type: integer
base_cases:
  - ["(= (card S) 0)"]
)yaml";
  DomainDef domain = load_domain(domain_text);
  CHECK_THROWS_AS(
      load_problem(domain,
                   "object_numbers:\n  items: 2\ntarget:\n  S: []\ntable_values:\n"
                   "  w: [1, 2]\n"),
      ParseError);
  Model ok = load_problem(domain,
                          "object_numbers:\n  items: 2\ntarget:\n  S: []\ntable_values:\n"
                          "  w: [[1, 2], [3, 4]]\n");
  CHECK(ok.tables.numeric[ok.tables.find("w")->second].at({1, 0}) == Number(3));
}

TEST_CASE("emitted domains reach a fixpoint") {
  for (auto cls : {bench::ProblemClass::tsptw, bench::ProblemClass::cvrp,
                   bench::ProblemClass::salbp1, bench::ProblemClass::bin_packing,
                   bench::ProblemClass::mosp, bench::ProblemClass::graph_clear}) {
    std::string first = emit_domain(load_domain(bench::domain_yaml(cls)));
    std::string second = emit_domain(load_domain(first));
    CHECK(first == second);
  }
}

TEST_CASE("fractional table values survive the YAML round trip") {
  bench::BinPackingInstance inst;
  inst.items = 3;
  inst.capacity = 9;
  inst.size = {3, 6, 4};  // 3 == c/3 and 6 == 2c/3 hit the exact buckets
  DomainDef domain = load_domain(bench::domain_yaml(bench::ProblemClass::bin_packing));
  Model loaded = load_problem(domain, bench::problem_yaml({bench::ProblemClass::bin_packing, inst}));
  Model built = bench::build_bin_packing(inst);
  auto lw = loaded.tables.find("w3");
  auto bw = built.tables.find("w3");
  for (std::int64_t k = 0; k < 3; ++k) {
    CHECK(loaded.tables.numeric[lw->second].at({k}) == built.tables.numeric[bw->second].at({k}));
  }
}

TEST_CASE("element and boolean tables load and evaluate") {
  const char* domain_text = R"yaml(objects: [slots]
state_variables:
  - {name: p, type: element, object: slots}
tables:
  - {name: succ, type: element, args: [slots], object: slots}
  - {name: open, type: boolean, args: [slots]}
reduce: min
cost_type: integer
base_cases:
  - ["(= p 2)"]
transitions:
  - name: hop
    preconditions: ["(open p)"]
    effects:
      p: "(succ p)"
    cost: "(+ 1 cost)"
)yaml";
  DomainDef domain = load_domain(domain_text);
  Model m = load_problem(domain,
                         "object_numbers:\n  slots: 3\ntarget:\n  p: 0\ntable_values:\n"
                         "  succ: [1, 2, 0]\n  open: [true, true, false]\n");
  Solution solution = solve(m);
  REQUIRE(solution.status == SolveStatus::optimal);
  CHECK(*solution.cost == Number(2));  // 0 -> 1 -> 2

  // A closed slot on the way makes the chain infeasible.
  Model blocked = load_problem(domain,
                               "object_numbers:\n  slots: 3\ntarget:\n  p: 0\ntable_values:\n"
                               "  succ: [1, 2, 0]\n  open: [true, false, false]\n");
  CHECK(solve(blocked).status == SolveStatus::infeasible);

  // Element table entries must stay inside their object type.
  CHECK_THROWS_AS(
      load_problem(domain,
                   "object_numbers:\n  slots: 3\ntarget:\n  p: 0\ntable_values:\n"
                   "  succ: [1, 2, 7]\n  open: [true, true, false]\n"),
      ParseError);
}

TEST_CASE("problem files may add base cases and transitions") {
  DomainDef domain = load_domain(bench::domain_yaml(bench::ProblemClass::graph_clear));
  bench::GraphClearInstance inst;
  inst.nodes = 3;
  inst.node_weight = {5, 5, 5};
  inst.edge_weight = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  std::string problem = bench::problem_yaml({bench::ProblemClass::graph_clear, inst});

  // An extra base case that accepts any two swept nodes ends the search a
  // step earlier.
  Model relaxed = load_problem(domain, problem + "base_cases:\n  - [\"(>= (card C) 2)\"]\n");
  CHECK(relaxed.base_cases.size() == 2);
  Solution a = solve(relaxed);
  Model original = load_problem(domain, problem);
  Solution b = solve(original);
  REQUIRE(a.status == SolveStatus::optimal);
  REQUIRE(b.status == SolveStatus::optimal);
  CHECK(*a.cost <= *b.cost);

  // An extra transition that sweeps node 0 for free.
  std::string extra =
      "transitions:\n"
      "  - name: freebie\n"
      "    preconditions: [\"(not (is_in 0 C))\"]\n"
      "    effects:\n"
      "      C: \"(add 0 C)\"\n"
      "    cost: \"(max 0 cost)\"\n";
  Model with_extra = load_problem(domain, problem + extra);
  CHECK(with_extra.transitions.size() == original.transitions.size() + 1);
  Solution c = solve(with_extra);
  REQUIRE(c.status == SolveStatus::optimal);
  CHECK(*c.cost <= *b.cost);
}

TEST_CASE("forall may mix object-type and set-variable binders") {
  const char* domain_text = R"yaml(objects: [items]
state_variables:
  - {name: S, type: set, object: items}
tables:
  - {name: link, type: boolean, args: [items, items]}
reduce: min
cost_type: integer
constraints:
  - forall: [{name: x, object: items}, {name: y, object: S}]
    condition: "(link x y)"
base_cases:
  - ["(= (card S) 0)"]
transitions:
  - name: drop
    parameters: [{name: x, object: S}]
    effects:
      S: "(remove x S)"
    cost: "(+ 1 cost)"
)yaml";
  DomainDef domain = load_domain(domain_text);
  Model m = load_problem(domain,
                         "object_numbers:\n  items: 2\ntarget:\n  S: [0, 1]\ntable_values:\n"
                         "  link: [[true, true], [true, false]]\n");
  // The object-type binder expands load-time: one quantified condition per x.
  CHECK(m.state_constraints.size() == 2);
  // link[1][1] is false, so any state with 1 in S violates the constraint.
  CHECK(!check_constraints(m, m.target));
  State ok = m.blank_state();
  ok.sets[0].insert(0);
  CHECK(check_constraints(m, ok));
}

TEST_CASE("continuous models carry real values end to end") {
  const char* domain_text = R"yaml(objects: [jobs]
state_variables:
  - {name: S, type: set, object: jobs}
tables:
  - {name: w, type: numeric, args: [jobs]}
reduce: min
cost_type: continuous
base_cases:
  - ["(= (card S) 0)"]
transitions:
  - name: run
    parameters: [{name: x, object: S}]
    effects:
      S: "(remove x S)"
    cost: "(+ (w x) cost)"
dual_bounds: ["0.0"]
)yaml";
  DomainDef domain = load_domain(domain_text);
  Model m = load_problem(domain,
                         "object_numbers:\n  jobs: 3\ntarget:\n  S: [0, 1, 2]\n"
                         "table_values:\n  w: [0.25, 1.5, 2.25]\n");
  CHECK(m.cost_type == CostType::continuous);
  Solution solution = solve(m);
  REQUIRE(solution.status == SolveStatus::optimal);
  CHECK(solution.cost->as_double() == doctest::Approx(4.0).epsilon(1e-12));
  OracleResult reference = oracle_solve(m);
  CHECK(reference.value->as_double() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("problem files may add constraints and dual bounds") {
  DomainDef domain = load_domain(bench::domain_yaml(bench::ProblemClass::graph_clear));
  bench::GraphClearInstance inst;
  inst.nodes = 2;
  inst.node_weight = {1, 1};
  inst.edge_weight = {{0, 1}, {1, 0}};
  std::string problem = bench::problem_yaml({bench::ProblemClass::graph_clear, inst});
  problem += "dual_bounds: [\"1\"]\nconstraints: [\"(<= (card C) 2)\"]\n";
  Model m = load_problem(domain, problem);
  CHECK(m.dual_bounds.size() == 2);
  CHECK(m.state_constraints.size() == 1);
  CHECK(dual_bound(m, m.target) == Number(1));
  CHECK(*solve(m).cost == Number(2));
}

TEST_CASE("mutated domain files fail cleanly, never crash") {
  const std::string base = bench::domain_yaml(bench::ProblemClass::salbp1);
  bench::SalbpInstance inst;
  inst.tasks = 3;
  inst.cycle_time = 5;
  inst.time = {2, 3, 4};
  inst.predecessors = {{}, {0}, {}};
  const std::string problem = bench::problem_yaml({bench::ProblemClass::salbp1, inst});

  // Drop each line of the domain in turn; every mutation either still loads
  // or raises a structured error.
  std::vector<std::string> lines;
  std::istringstream stream(base);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  int loaded = 0, rejected = 0;
  for (std::size_t skip = 0; skip < lines.size(); ++skip) {
    std::string mutated;
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (k != skip) mutated += lines[k] + "\n";
    }
    try {
      Model m = load_problem(load_domain(mutated), problem);
      solve(m, {1.0, 100000});
      ++loaded;
    } catch (const DidpError&) {
      ++rejected;
    }
  }
  CHECK(loaded + rejected == static_cast<int>(lines.size()));
  CHECK(rejected > 0);
}
