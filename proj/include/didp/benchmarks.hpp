#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "didp/model.hpp"

namespace didp::bench {

// --- instance types ---------------------------------------------------

// Location 0 is the depot. `triangle` asserts that travel times satisfy the
// triangle inequality, in which case the detour-free travel time equals the
// direct one; otherwise it is computed by all-pairs shortest paths.
struct TsptwInstance {
  int locations = 0;  // depot + customers
  bool triangle = false;
  std::vector<std::vector<std::int64_t>> travel;
  std::vector<std::int64_t> window_open, window_close;
};

struct CvrpInstance {
  int locations = 0;  // depot + customers
  int vehicles = 1;
  std::int64_t capacity = 0;
  std::vector<std::int64_t> demand;  // demand[0] == 0
  std::vector<std::vector<std::int64_t>> travel;
};

struct SalbpInstance {
  int tasks = 0;
  std::int64_t cycle_time = 0;
  std::vector<std::int64_t> time;
  std::vector<std::vector<int>> predecessors;
};

struct BinPackingInstance {
  int items = 0;
  std::int64_t capacity = 0;
  std::vector<std::int64_t> size;
};

struct MospInstance {
  int customers = 0;
  int products = 0;
  std::vector<std::vector<int>> orders;  // product indices per customer
};

struct GraphClearInstance {
  int nodes = 0;
  std::vector<std::int64_t> node_weight;
  std::vector<std::vector<std::int64_t>> edge_weight;  // symmetric, 0 = no edge
};

enum class ProblemClass { tsptw, cvrp, salbp1, bin_packing, mosp, graph_clear };

const char* to_string(ProblemClass cls);
ProblemClass problem_class_from(const std::string& name);

struct AnyInstance {
  ProblemClass cls;
  std::variant<TsptwInstance, CvrpInstance, SalbpInstance, BinPackingInstance, MospInstance,
               GraphClearInstance>
      data;
};

// --- model builders ----------------------------------------------------

Model build_tsptw(const TsptwInstance& instance);
Model build_cvrp(const CvrpInstance& instance);
Model build_salbp1(const SalbpInstance& instance);

struct BinPackingOptions {
  bool symmetry_breaking = true;
};
Model build_bin_packing(const BinPackingInstance& instance, const BinPackingOptions& = {});

Model build_mosp(const MospInstance& instance);
Model build_graph_clear(const GraphClearInstance& instance);

Model build(const AnyInstance& instance);

// Station lower-bound weights shared by the SALBP-1 and bin packing dual
// bounds: w2 = 1 on (c/2, c]; w2p = 1/2 at exactly c/2; w3 = 1/3 at c/3,
// 1/2 on (c/3, 2c/3), 2/3 at 2c/3, 1 above.
struct StationBoundWeights {
  std::vector<Number> w2, w2p, w3;
};
StationBoundWeights station_bound_weights(const std::vector<std::int64_t>& times,
                                          std::int64_t cycle_time);

// --- seeded random generators -------------------------------------------

TsptwInstance generate_tsptw(int customers, std::uint64_t seed);
CvrpInstance generate_cvrp(int customers, int vehicles, std::uint64_t seed);
SalbpInstance generate_salbp1(int tasks, double density, std::uint64_t seed);
BinPackingInstance generate_bin_packing(int items, std::uint64_t seed);
MospInstance generate_mosp(int customers, int products, std::uint64_t seed);
GraphClearInstance generate_graph_clear(int nodes, double density, std::uint64_t seed);
GraphClearInstance generate_graph_clear_grid(int rows, int cols, std::uint64_t seed);

// Default ladder used by the CLI: one instance of `cls` at `size` per seed.
AnyInstance generate(ProblemClass cls, int size, std::uint64_t seed);

// --- plain-text instance files -------------------------------------------

AnyInstance read_instance(ProblemClass cls, std::istream& in);
AnyInstance read_instance_file(ProblemClass cls, const std::string& path);
void write_instance(const AnyInstance& instance, std::ostream& out);

// --- YAML-DyPDL emission ---------------------------------------------

// Static, parameterized domain file shared by all instances of a class.
std::string domain_yaml(ProblemClass cls);
// Instance-specific problem file matching domain_yaml(cls).
std::string problem_yaml(const AnyInstance& instance);

}  // namespace didp::bench
