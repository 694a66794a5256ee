// didp: solve, verify, and generate DyPDL models from the command line.
//
// Subcommands:
//   solve DOMAIN PROBLEM     exact search; exit 0 optimal, 2 infeasible,
//                            3 resource limit, 1 input error
//   oracle DOMAIN PROBLEM    exhaustive reference solver
//   validate DOMAIN PROBLEM SOLUTION
//                            replay a solution file (one transition name
//                            per line)
//   generate CLASS           write instance + YAML files for seeded
//                            random instances
//   bench CLASS              solve a seeded instance ladder and print a
//                            summary table

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "didp/benchmarks.hpp"
#include "didp/errors.hpp"
#include "didp/oracle.hpp"
#include "didp/report.hpp"
#include "didp/solver.hpp"
#include "didp/yaml_frontend.hpp"

namespace {

int log_level() {
  const char* env = std::getenv("DIDP_LOG");
  if (env == nullptr) return 0;
  std::string v = env;
  if (v == "debug" || v == "2") return 2;
  if (v == "info" || v == "1") return 1;
  return 0;
}

void log_info(const std::string& message) {
  if (log_level() >= 1) std::cerr << "[didp] " << message << "\n";
}

int exit_code(didp::SolveStatus status) {
  switch (status) {
    case didp::SolveStatus::optimal: return 0;
    case didp::SolveStatus::infeasible: return 2;
    case didp::SolveStatus::time_limit:
    case didp::SolveStatus::memory_limit: return 3;
    case didp::SolveStatus::unsupported_cost_form: return 1;
  }
  return 1;
}

std::vector<std::string> read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw didp::ParseError("cannot open '" + path + "'");
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    names.push_back(line);
  }
  return names;
}

struct BenchRow {
  int size = 0;
  std::uint64_t seed = 0;
  didp::SolveStatus status = didp::SolveStatus::infeasible;
  std::string cost;
  std::uint64_t expanded = 0;
  double time_s = 0.0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domain-independent dynamic programming toolkit"};
  app.require_subcommand(1);

  std::string domain_path, problem_path, solution_path, out_dir = ".", class_name, format = "human";
  double time_limit = 1800.0;
  std::uint64_t max_states = 10'000'000;
  std::uint64_t seed = 0;
  int count = 1, size = 6, jobs = 1;
  std::vector<int> sizes;
  std::string solution_out;

  auto* solve_cmd = app.add_subcommand("solve", "solve a YAML-DyPDL model exactly");
  solve_cmd->add_option("domain", domain_path, "domain file")->required();
  solve_cmd->add_option("problem", problem_path, "problem file")->required();
  solve_cmd->add_option("--time-limit", time_limit, "time limit in seconds");
  solve_cmd->add_option("--max-states", max_states, "generated-state limit");
  solve_cmd->add_option("--format", format, "human or jsonl");
  solve_cmd->add_option("--solution-out", solution_out, "write transition names to this file");

  auto* oracle_cmd = app.add_subcommand("oracle", "solve by exhaustive recursion");
  oracle_cmd->add_option("domain", domain_path, "domain file")->required();
  oracle_cmd->add_option("problem", problem_path, "problem file")->required();
  oracle_cmd->add_option("--max-states", max_states, "distinct-state budget");
  oracle_cmd->add_option("--format", format, "human or jsonl");

  auto* validate_cmd = app.add_subcommand("validate", "replay a solution file against a model");
  validate_cmd->add_option("domain", domain_path, "domain file")->required();
  validate_cmd->add_option("problem", problem_path, "problem file")->required();
  validate_cmd->add_option("solution", solution_path, "transition names, one per line")->required();

  auto* generate_cmd = app.add_subcommand("generate", "generate random instances and model files");
  generate_cmd->add_option("class", class_name, "tsptw cvrp salbp1 bin_packing mosp graph_clear")
      ->required();
  generate_cmd->add_option("--size", size, "instance size");
  generate_cmd->add_option("--seed", seed, "base random seed");
  generate_cmd->add_option("--count", count, "number of instances");
  generate_cmd->add_option("--out-dir", out_dir, "output directory");

  auto* bench_cmd = app.add_subcommand("bench", "run a seeded ladder and print a table");
  bench_cmd->add_option("class", class_name, "problem class")->required();
  bench_cmd->add_option("--sizes", sizes, "instance sizes")->delimiter(',');
  bench_cmd->add_option("--count", count, "instances per size");
  bench_cmd->add_option("--seed", seed, "base random seed");
  bench_cmd->add_option("--time-limit", time_limit, "per-instance time limit");
  bench_cmd->add_option("--max-states", max_states, "per-instance generated-state limit");
  bench_cmd->add_option("--jobs", jobs, "parallel workers");
  bench_cmd->add_option("--format", format, "human or machine (machine omits timings)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) {
      log_info("loading " + domain_path + " + " + problem_path);
      didp::Model model = didp::load_files(domain_path, problem_path);
      log_info("grounded " + std::to_string(model.transitions.size()) + " transitions");
      didp::SolveLimits limits{time_limit, max_states};
      didp::Solution solution = didp::solve(model, limits);
      if (log_level() >= 2) std::cerr << didp::format_human(model, solution);
      if (format == "jsonl") {
        std::cout << didp::format_jsonl(model, solution);
      } else {
        std::cout << didp::format_human(model, solution);
      }
      if (!solution_out.empty() && solution.status == didp::SolveStatus::optimal) {
        std::ofstream out(solution_out);
        for (const auto& name : didp::transition_names(model, solution.transition_ids)) {
          out << name << "\n";
        }
      }
      return exit_code(solution.status);
    }

    if (oracle_cmd->parsed()) {
      didp::Model model = didp::load_files(domain_path, problem_path);
      didp::OracleResult result = didp::oracle_solve(model, {max_states});
      if (format == "jsonl") {
        std::cout << didp::format_jsonl(model, result);
      } else {
        std::cout << didp::format_human(result);
      }
      if (result.budget_exceeded) return 3;
      return result.value ? 0 : 2;
    }

    if (validate_cmd->parsed()) {
      didp::Model model = didp::load_files(domain_path, problem_path);
      auto names = read_solution_file(solution_path);
      didp::ValidationResult result = didp::validate_solution_named(model, names);
      if (result.valid) {
        std::cout << "valid, cost " << result.cost->str() << "\n";
        return 0;
      }
      std::cout << "violation at step " << result.step << ": " << result.reason << "\n";
      return 1;
    }

    if (generate_cmd->parsed()) {
      didp::bench::ProblemClass cls = didp::bench::problem_class_from(class_name);
      std::filesystem::create_directories(out_dir);
      for (int k = 0; k < count; ++k) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        didp::bench::AnyInstance instance = didp::bench::generate(cls, size, s);
        std::string stem = out_dir + "/" + class_name + "-" + std::to_string(size) + "-" +
                           std::to_string(s);
        {
          std::ofstream out(stem + ".txt");
          didp::bench::write_instance(instance, out);
        }
        {
          std::ofstream out(out_dir + "/" + class_name + "-domain.yaml");
          out << didp::bench::domain_yaml(cls);
        }
        {
          std::ofstream out(stem + "-problem.yaml");
          out << didp::bench::problem_yaml(instance);
        }
        std::cout << stem << "\n";
      }
      return 0;
    }

    if (bench_cmd->parsed()) {
      didp::bench::ProblemClass cls = didp::bench::problem_class_from(class_name);
      if (sizes.empty()) sizes = {4, 5, 6};
      std::vector<BenchRow> rows;
      for (int s : sizes) {
        for (int k = 0; k < count; ++k) {
          rows.push_back({s, seed + static_cast<std::uint64_t>(k)});
        }
      }
      std::atomic<std::size_t> next{0};
      std::mutex log_mutex;
      auto worker = [&] {
        while (true) {
          std::size_t index = next.fetch_add(1);
          if (index >= rows.size()) return;
          BenchRow& row = rows[index];
          didp::bench::AnyInstance instance = didp::bench::generate(cls, row.size, row.seed);
          didp::Model model = didp::bench::build(instance);
          didp::Solution solution = didp::solve(model, {time_limit, max_states});
          row.status = solution.status;
          row.cost = solution.cost ? solution.cost->str() : "-";
          row.expanded = solution.stats.expanded;
          row.time_s = solution.stats.wall_time_s;
          std::lock_guard<std::mutex> lock(log_mutex);
          log_info("size " + std::to_string(row.size) + " seed " + std::to_string(row.seed) +
                   ": " + didp::to_string(row.status));
        }
      };
      std::vector<std::thread> threads;
      for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
      worker();
      for (auto& t : threads) t.join();

      bool machine = format == "machine";
      std::cout << "size seed status cost expanded";
      if (!machine) std::cout << " time_s";
      std::cout << "\n";
      int solved = 0;
      double total_time = 0;
      for (const auto& row : rows) {
        std::cout << row.size << " " << row.seed << " " << didp::to_string(row.status) << " "
                  << row.cost << " " << row.expanded;
        if (!machine) {
          std::ostringstream time;
          time.precision(4);
          time << std::fixed << row.time_s;
          std::cout << " " << time.str();
        }
        std::cout << "\n";
        if (row.status == didp::SolveStatus::optimal) {
          ++solved;
          total_time += row.time_s;
        }
      }
      std::cout << "solved " << solved << "/" << rows.size();
      if (!machine && solved > 0) {
        std::ostringstream time;
        time.precision(4);
        time << std::fixed << (total_time / solved);
        std::cout << " mean_time " << time.str() << "s";
      }
      std::cout << "\n";
      return 0;
    }
  } catch (const didp::DidpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
