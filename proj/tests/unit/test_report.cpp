#include <doctest.h>

#include "didp/benchmarks.hpp"
#include "didp/report.hpp"
#include "didp/solver.hpp"

using namespace didp;
namespace bench = didp::bench;

namespace {

Model tour_model() {
  bench::TsptwInstance inst;
  inst.locations = 3;
  inst.triangle = true;
  inst.travel = {{0, 5, 6}, {5, 0, 4}, {6, 4, 0}};
  inst.window_open = {0, 0, 0};
  inst.window_close = {100, 100, 100};
  return bench::build_tsptw(inst);
}

}  // namespace

TEST_CASE("machine-readable schema is pinned") {
  Model m = tour_model();
  Solution solution = solve(m);
  REQUIRE(solution.status == SolveStatus::optimal);
  // Fix the timing field so the record is deterministic.
  std::string line = format_jsonl(m, solution, 0.0);
  CHECK(line ==
        "{\"best_bound\":15,\"blind\":false,\"cost\":15,\"event\":\"result\","
        "\"expanded\":" + std::to_string(solution.stats.expanded) +
        ",\"generated\":" + std::to_string(solution.stats.generated) +
        ",\"peak_registry\":" + std::to_string(solution.stats.peak_registry) +
        ",\"status\":\"Optimal\",\"time_s\":0.0,"
        "\"transitions\":[\"visit 1\",\"visit 2\",\"return\"]}\n");
}

TEST_CASE("human report names the pieces") {
  Model m = tour_model();
  Solution solution = solve(m);
  std::string text = format_human(m, solution);
  CHECK(text.find("status: Optimal") != std::string::npos);
  CHECK(text.find("cost: 15") != std::string::npos);
  CHECK(text.find("visit 1") != std::string::npos);
  CHECK(text.find("best bound: 15") != std::string::npos);
}

TEST_CASE("oracle reports") {
  Model m = tour_model();
  OracleResult result = oracle_solve(m);
  std::string line = format_jsonl(m, result);
  CHECK(line.find("\"event\":\"oracle\"") != std::string::npos);
  CHECK(line.find("\"cost\":15") != std::string::npos);
  CHECK(format_human(result).find("cost: 15") != std::string::npos);
}
