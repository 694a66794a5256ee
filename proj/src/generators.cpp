#include <algorithm>
#include <numeric>

#include "didp/benchmarks.hpp"
#include "didp/errors.hpp"

namespace didp::bench {

namespace {

// splitmix64: tiny, stable across platforms, good enough for instance
// generation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi]; modulo bias is irrelevant here.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t k = v.size(); k > 1; --k) {
      std::swap(v[k - 1], v[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(k) - 1))]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace

TsptwInstance generate_tsptw(int customers, std::uint64_t seed) {
  Rng rng(seed ^ 0x7457707700000000ull);
  int n = customers + 1;
  TsptwInstance inst;
  inst.locations = n;
  inst.triangle = false;
  inst.travel.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) inst.travel[i][j] = rng.range(1, 20);
    }
  }
  // Windows built around a random feasible tour, so at least one solution
  // respects every deadline.
  std::vector<int> tour(customers);
  std::iota(tour.begin(), tour.end(), 1);
  rng.shuffle(tour);
  inst.window_open.assign(n, 0);
  inst.window_close.assign(n, 0);
  std::int64_t horizon = 0;
  for (int i = 0; i < n; ++i) horizon += *std::max_element(inst.travel[i].begin(), inst.travel[i].end());
  inst.window_close[0] = horizon + 1;
  std::int64_t now = 0;
  int at = 0;
  for (int j : tour) {
    now += inst.travel[at][j];
    if (rng.range(0, 2) == 0) {
      // A third of the customers are unconstrained, which keeps the search
      // from collapsing to the generating tour.
      inst.window_open[j] = 0;
      inst.window_close[j] = horizon;
    } else {
      std::int64_t slack_before = rng.range(0, 10);
      std::int64_t slack_after = rng.range(1, 30);
      inst.window_open[j] = std::max<std::int64_t>(0, now - slack_before);
      inst.window_close[j] = now + slack_after;
    }
    if (now < inst.window_open[j]) now = inst.window_open[j];
    at = j;
  }
  return inst;
}

CvrpInstance generate_cvrp(int customers, int vehicles, std::uint64_t seed) {
  Rng rng(seed ^ 0x6376727000000000ull);
  int n = customers + 1;
  CvrpInstance inst;
  inst.locations = n;
  inst.vehicles = vehicles;
  inst.travel.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::int64_t d = rng.range(1, 20);
      inst.travel[i][j] = d;
      inst.travel[j][i] = d;
    }
  }
  inst.demand.assign(n, 0);
  for (int j = 1; j < n; ++j) inst.demand[j] = rng.range(1, 10);
  // Feasible by construction: capacity covers a random assignment of
  // customers to the vehicles.
  std::vector<std::int64_t> load(static_cast<std::size_t>(vehicles), 0);
  for (int j = 1; j < n; ++j) {
    load[static_cast<std::size_t>(rng.range(0, vehicles - 1))] += inst.demand[j];
  }
  std::int64_t max_load = *std::max_element(load.begin(), load.end());
  std::int64_t max_demand = customers > 0
                                ? *std::max_element(inst.demand.begin() + 1, inst.demand.end())
                                : 0;
  inst.capacity = std::max(max_load, max_demand) + rng.range(0, 3);
  return inst;
}

SalbpInstance generate_salbp1(int tasks, double density, std::uint64_t seed) {
  Rng rng(seed ^ 0x73616c6200000000ull);
  SalbpInstance inst;
  inst.tasks = tasks;
  inst.cycle_time = 10;
  inst.predecessors.assign(tasks, {});
  for (int i = 0; i < tasks; ++i) {
    inst.time.push_back(rng.range(1, inst.cycle_time));
  }
  // Edges only from lower to higher indices keep the graph acyclic.
  for (int i = 0; i < tasks; ++i) {
    for (int j = i + 1; j < tasks; ++j) {
      if (rng.unit() < density) inst.predecessors[j].push_back(i);
    }
  }
  return inst;
}

BinPackingInstance generate_bin_packing(int items, std::uint64_t seed) {
  Rng rng(seed ^ 0x62696e7000000000ull);
  BinPackingInstance inst;
  inst.items = items;
  inst.capacity = 10;
  for (int i = 0; i < items; ++i) inst.size.push_back(rng.range(1, inst.capacity));
  return inst;
}

MospInstance generate_mosp(int customers, int products, std::uint64_t seed) {
  Rng rng(seed ^ 0x6d6f737000000000ull);
  MospInstance inst;
  inst.customers = customers;
  inst.products = products;
  inst.orders.assign(customers, {});
  for (int c = 0; c < customers; ++c) {
    int count = static_cast<int>(rng.range(1, std::max(1, products / 2 + 1)));
    std::vector<int> all(products);
    std::iota(all.begin(), all.end(), 0);
    rng.shuffle(all);
    for (int k = 0; k < count && k < products; ++k) inst.orders[c].push_back(all[k]);
    std::sort(inst.orders[c].begin(), inst.orders[c].end());
  }
  return inst;
}

GraphClearInstance generate_graph_clear(int nodes, double density, std::uint64_t seed) {
  Rng rng(seed ^ 0x6763727200000000ull);
  GraphClearInstance inst;
  inst.nodes = nodes;
  inst.edge_weight.assign(nodes, std::vector<std::int64_t>(nodes, 0));
  for (int i = 0; i < nodes; ++i) inst.node_weight.push_back(rng.range(1, 5));
  // A random spanning tree keeps the graph connected; extra edges follow
  // the density parameter.
  for (int v = 1; v < nodes; ++v) {
    int u = static_cast<int>(rng.range(0, v - 1));
    std::int64_t w = rng.range(1, 5);
    inst.edge_weight[u][v] = w;
    inst.edge_weight[v][u] = w;
  }
  for (int i = 0; i < nodes; ++i) {
    for (int j = i + 1; j < nodes; ++j) {
      if (inst.edge_weight[i][j] == 0 && rng.unit() < density) {
        std::int64_t w = rng.range(1, 5);
        inst.edge_weight[i][j] = w;
        inst.edge_weight[j][i] = w;
      }
    }
  }
  return inst;
}

GraphClearInstance generate_graph_clear_grid(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed ^ 0x6772696400000000ull);
  int nodes = rows * cols;
  GraphClearInstance inst;
  inst.nodes = nodes;
  inst.edge_weight.assign(nodes, std::vector<std::int64_t>(nodes, 0));
  for (int v = 0; v < nodes; ++v) inst.node_weight.push_back(rng.range(1, 5));
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        std::int64_t w = rng.range(1, 5);
        inst.edge_weight[id(r, c)][id(r, c + 1)] = w;
        inst.edge_weight[id(r, c + 1)][id(r, c)] = w;
      }
      if (r + 1 < rows) {
        std::int64_t w = rng.range(1, 5);
        inst.edge_weight[id(r, c)][id(r + 1, c)] = w;
        inst.edge_weight[id(r + 1, c)][id(r, c)] = w;
      }
    }
  }
  return inst;
}

AnyInstance generate(ProblemClass cls, int size, std::uint64_t seed) {
  switch (cls) {
    case ProblemClass::tsptw:
      return {cls, generate_tsptw(size, seed)};
    case ProblemClass::cvrp:
      return {cls, generate_cvrp(size, 2 + static_cast<int>(seed % 2), seed)};
    case ProblemClass::salbp1:
      return {cls, generate_salbp1(size, 0.3, seed)};
    case ProblemClass::bin_packing:
      return {cls, generate_bin_packing(size, seed)};
    case ProblemClass::mosp:
      return {cls, generate_mosp(size, size, seed)};
    case ProblemClass::graph_clear:
      return {cls, generate_graph_clear(size, 0.3, seed)};
  }
  throw InvalidInstance("unknown problem class");
}

}  // namespace didp::bench
