#include "didp/benchmarks.hpp"

#include <algorithm>
#include <functional>

#include "didp/errors.hpp"

namespace didp::bench {

using namespace didp::expr;

const char* to_string(ProblemClass cls) {
  switch (cls) {
    case ProblemClass::tsptw: return "tsptw";
    case ProblemClass::cvrp: return "cvrp";
    case ProblemClass::salbp1: return "salbp1";
    case ProblemClass::bin_packing: return "bin_packing";
    case ProblemClass::mosp: return "mosp";
    case ProblemClass::graph_clear: return "graph_clear";
  }
  return "?";
}

ProblemClass problem_class_from(const std::string& name) {
  for (ProblemClass cls :
       {ProblemClass::tsptw, ProblemClass::cvrp, ProblemClass::salbp1, ProblemClass::bin_packing,
        ProblemClass::mosp, ProblemClass::graph_clear}) {
    if (name == to_string(cls)) return cls;
  }
  throw InvalidInstance("unknown problem class '" + name + "'");
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInstance(what);
}

void check_square_nonnegative(const std::vector<std::vector<std::int64_t>>& matrix, int n,
                              const std::string& what) {
  require(static_cast<int>(matrix.size()) == n, what + " matrix has the wrong row count");
  for (const auto& row : matrix) {
    require(static_cast<int>(row.size()) == n, what + " matrix has a ragged row");
    for (auto v : row) require(v >= 0, what + " matrix has a negative entry");
  }
}

NumericTable make_matrix_table(const std::string& name, int n,
                               const std::vector<std::vector<std::int64_t>>& values) {
  NumericTable table;
  table.name = name;
  table.dims = {n, n};
  table.values.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : values) {
    for (auto v : row) table.values.emplace_back(v);
  }
  return table;
}

NumericTable make_vector_table(const std::string& name, const std::vector<std::int64_t>& values,
                               int n) {
  NumericTable table;
  table.name = name;
  table.dims = {n};
  for (auto v : values) table.values.emplace_back(v);
  return table;
}

NumericTable make_number_table(const std::string& name, const std::vector<Number>& values, int n) {
  NumericTable table;
  table.name = name;
  table.dims = {n};
  table.values = values;
  return table;
}

NumericTable make_scalar_table(const std::string& name, std::int64_t value) {
  NumericTable table;
  table.name = name;
  table.values.emplace_back(value);
  return table;
}

std::string ground_name(const std::string& base, std::int64_t value) {
  return base + " " + std::to_string(value);
}

// Detour-free travel times: all-pairs shortest paths over the travel matrix.
std::vector<std::vector<std::int64_t>> shortest_travel(
    const std::vector<std::vector<std::int64_t>>& travel) {
  auto out = travel;
  int n = static_cast<int>(out.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out[i][j] = std::min(out[i][j], out[i][k] + out[k][j]);
      }
    }
  }
  return out;
}

}  // namespace

StationBoundWeights station_bound_weights(const std::vector<std::int64_t>& times,
                                          std::int64_t cycle_time) {
  StationBoundWeights w;
  const Number half = Number::rational(1, 2);
  const Number third = Number::rational(1, 3);
  const Number two_thirds = Number::rational(2, 3);
  for (auto t : times) {
    Number ratio = Number(t) / Number(cycle_time);
    w.w2.push_back(ratio > half ? Number(1) : Number(0));
    w.w2p.push_back(ratio == half ? half : Number(0));
    if (ratio > two_thirds) {
      w.w3.push_back(Number(1));
    } else if (ratio == two_thirds) {
      w.w3.push_back(two_thirds);
    } else if (ratio > third) {
      w.w3.push_back(half);
    } else if (ratio == third) {
      w.w3.push_back(third);
    } else {
      w.w3.push_back(Number(0));
    }
  }
  return w;
}

Model build_tsptw(const TsptwInstance& instance) {
  int n = instance.locations;
  require(n >= 1, "tsptw instance needs at least the depot");
  check_square_nonnegative(instance.travel, n, "travel");
  require(static_cast<int>(instance.window_open.size()) == n &&
              static_cast<int>(instance.window_close.size()) == n,
          "tsptw windows do not match the location count");

  Model m;
  m.reduce = Reduce::min;
  m.cost_type = CostType::integer;
  m.object_types.push_back({"customers", n});
  m.variables.push_back({"U", VarKind::set, 0, Preference::none, 0});
  m.variables.push_back({"i", VarKind::element, 0, Preference::none, 0});
  m.variables.push_back({"t", VarKind::numeric, -1, Preference::less, 0});

  int a_id = m.tables.add_numeric(make_vector_table("a", instance.window_open, n));
  int b_id = m.tables.add_numeric(make_vector_table("b", instance.window_close, n));
  int c_id = m.tables.add_numeric(make_matrix_table("c", n, instance.travel));
  int cstar_id = m.tables.add_numeric(make_matrix_table(
      "cstar", n, instance.triangle ? instance.travel : shortest_travel(instance.travel)));

  auto U = set_var(0);
  auto i = elem_var(0);
  auto t = num_var(0);

  m.target = m.blank_state();
  for (int j = 1; j < n; ++j) m.target.sets[0].insert(j);

  // forall j in U: t + cstar[i][j] <= b[j]
  m.state_constraints.push_back(
      forall(0, U,
             cmp(Comparison::le, add(t, num_table(cstar_id, {i, elem_param(0)})),
                 num_table(b_id, {elem_param(0)}))));

  m.base_cases.push_back({cmp(Comparison::eq, card(U), num_lit(Number(0))),
                          cmp(Comparison::eq, i, elem_lit(0))});

  for (int j = 0; j < n; ++j) {
    Transition visit;
    visit.name = ground_name("visit", j);
    visit.parameters = {{"j", j}};
    auto cij = num_table(c_id, {i, elem_lit(j)});
    visit.preconditions.push_back(is_in(elem_lit(j), U));
    visit.preconditions.push_back(
        cmp(Comparison::le, add(t, cij), num_table(b_id, {elem_lit(j)})));
    visit.set_effects.emplace_back(0, set_remove(elem_lit(j), U));
    visit.element_effects.emplace_back(0, elem_lit(j));
    visit.numeric_effects.emplace_back(0, nmax(add(t, cij), num_table(a_id, {elem_lit(j)})));
    visit.cost = add(cij, cost());
    m.transitions.push_back(std::move(visit));
  }
  {
    Transition ret;
    ret.name = "return";
    auto ci0 = num_table(c_id, {i, elem_lit(0)});
    ret.preconditions.push_back(cmp(Comparison::eq, card(U), num_lit(Number(0))));
    ret.preconditions.push_back(cmp(Comparison::ne, i, elem_lit(0)));
    ret.element_effects.emplace_back(0, elem_lit(0));
    ret.numeric_effects.emplace_back(0, add(t, ci0));
    ret.cost = add(ci0, cost());
    m.transitions.push_back(std::move(ret));
  }

  m.dual_bounds.push_back(num_lit(Number(0)));
  return m;
}

Model build_cvrp(const CvrpInstance& instance) {
  int n = instance.locations;
  require(n >= 1, "cvrp instance needs at least the depot");
  require(instance.vehicles >= 1, "cvrp instance needs at least one vehicle");
  require(instance.capacity >= 0, "cvrp capacity must be nonnegative");
  check_square_nonnegative(instance.travel, n, "travel");
  require(static_cast<int>(instance.demand.size()) == n, "cvrp demand vector size mismatch");
  require(instance.demand[0] == 0, "depot demand must be zero");
  for (auto d : instance.demand) require(d >= 0, "cvrp demands must be nonnegative");

  Model m;
  m.reduce = Reduce::min;
  m.cost_type = CostType::integer;
  m.object_types.push_back({"customers", n});
  m.variables.push_back({"U", VarKind::set, 0, Preference::none, 0});
  m.variables.push_back({"i", VarKind::element, 0, Preference::none, 0});
  m.variables.push_back({"l", VarKind::numeric, -1, Preference::less, 0});
  m.variables.push_back({"k", VarKind::numeric, -1, Preference::less, 1});

  std::vector<std::vector<std::int64_t>> via(n, std::vector<std::int64_t>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) via[a][b] = instance.travel[a][0] + instance.travel[0][b];
  }

  int q_id = m.tables.add_numeric(make_scalar_table("q", instance.capacity));
  int mveh_id = m.tables.add_numeric(make_scalar_table("m", instance.vehicles));
  int d_id = m.tables.add_numeric(make_vector_table("d", instance.demand, n));
  int c_id = m.tables.add_numeric(make_matrix_table("c", n, instance.travel));
  int cvia_id = m.tables.add_numeric(make_matrix_table("cvia", n, via));

  auto U = set_var(0);
  auto i = elem_var(0);
  auto l = num_var(0);
  auto k = num_var(1);

  m.target = m.blank_state();
  for (int j = 1; j < n; ++j) m.target.sets[0].insert(j);
  m.target.numerics[1] = Number(1);  // one vehicle in use from the start

  m.base_cases.push_back({cmp(Comparison::eq, card(U), num_lit(Number(0))),
                          cmp(Comparison::eq, i, elem_lit(0))});

  for (int j = 0; j < n; ++j) {
    Transition visit;
    visit.name = ground_name("visit", j);
    visit.parameters = {{"j", j}};
    auto dj = num_table(d_id, {elem_lit(j)});
    visit.preconditions.push_back(is_in(elem_lit(j), U));
    visit.preconditions.push_back(cmp(Comparison::le, add(l, dj), num_table(q_id, {})));
    visit.set_effects.emplace_back(0, set_remove(elem_lit(j), U));
    visit.element_effects.emplace_back(0, elem_lit(j));
    visit.numeric_effects.emplace_back(0, add(l, dj));
    visit.cost = add(num_table(c_id, {i, elem_lit(j)}), cost());
    m.transitions.push_back(std::move(visit));
  }
  for (int j = 0; j < n; ++j) {
    Transition visit;
    visit.name = ground_name("visit-via-depot", j);
    visit.parameters = {{"j", j}};
    visit.preconditions.push_back(is_in(elem_lit(j), U));
    visit.preconditions.push_back(cmp(Comparison::lt, k, num_table(mveh_id, {})));
    // The fresh vehicle must still be able to carry the customer.
    visit.preconditions.push_back(
        cmp(Comparison::le, num_table(d_id, {elem_lit(j)}), num_table(q_id, {})));
    visit.set_effects.emplace_back(0, set_remove(elem_lit(j), U));
    visit.element_effects.emplace_back(0, elem_lit(j));
    visit.numeric_effects.emplace_back(0, num_table(d_id, {elem_lit(j)}));
    visit.numeric_effects.emplace_back(1, add(k, num_lit(Number(1))));
    visit.cost = add(num_table(cvia_id, {i, elem_lit(j)}), cost());
    m.transitions.push_back(std::move(visit));
  }
  {
    Transition ret;
    ret.name = "return";
    ret.preconditions.push_back(cmp(Comparison::eq, card(U), num_lit(Number(0))));
    ret.preconditions.push_back(cmp(Comparison::ne, i, elem_lit(0)));
    ret.element_effects.emplace_back(0, elem_lit(0));
    ret.cost = add(num_table(c_id, {i, elem_lit(0)}), cost());
    m.transitions.push_back(std::move(ret));
  }

  m.dual_bounds.push_back(num_lit(Number(0)));
  return m;
}

namespace {

// The three station bounds shared by SALBP-1 and bin packing, evaluated on
// variables U (unfinished tasks/items) and r (remaining room).
std::vector<NumericPtr> station_dual_bounds(int t_id, int c_id, int w2_id, int w2p_id, int w3_id,
                                            SetPtr U, NumericPtr r) {
  auto c = num_table(c_id, {});
  std::vector<NumericPtr> bounds;
  bounds.push_back(expr::ceil(div(sub(sum(t_id, {U}), r), c)));
  bounds.push_back(sub(add(sum(w2_id, {U}), expr::ceil(sum(w2p_id, {U}))),
                       ite(cmp(Comparison::ge, r, div(c, num_lit(Number(2)))),
                           num_lit(Number(1)), num_lit(Number(0)))));
  bounds.push_back(sub(expr::ceil(sum(w3_id, {U})),
                       ite(cmp(Comparison::ge, r, div(c, num_lit(Number(3)))),
                           num_lit(Number(1)), num_lit(Number(0)))));
  return bounds;
}

}  // namespace

Model build_salbp1(const SalbpInstance& instance) {
  int n = instance.tasks;
  require(n >= 0, "salbp1 needs a nonnegative task count");
  require(instance.cycle_time > 0, "salbp1 cycle time must be positive");
  require(static_cast<int>(instance.time.size()) == n, "salbp1 time vector size mismatch");
  require(static_cast<int>(instance.predecessors.size()) == n,
          "salbp1 predecessor list size mismatch");
  for (auto t : instance.time) require(t >= 0, "salbp1 task times must be nonnegative");

  // The precedence graph must be acyclic.
  {
    std::vector<int> mark(n, 0);
    std::vector<int> order;
    std::function<void(int)> dfs = [&](int v) {
      mark[v] = 1;
      for (int p : instance.predecessors[v]) {
        require(p >= 0 && p < n, "salbp1 predecessor index out of range");
        if (mark[p] == 1) throw InvalidInstance("salbp1 precedence graph has a cycle");
        if (mark[p] == 0) dfs(p);
      }
      mark[v] = 2;
    };
    for (int v = 0; v < n; ++v) {
      if (mark[v] == 0) dfs(v);
    }
  }

  Model m;
  m.reduce = Reduce::min;
  m.cost_type = CostType::integer;
  m.object_types.push_back({"tasks", n});
  m.variables.push_back({"U", VarKind::set, 0, Preference::none, 0});
  m.variables.push_back({"r", VarKind::numeric, -1, Preference::more, 0});

  StationBoundWeights weights = station_bound_weights(instance.time, instance.cycle_time);
  int c_id = m.tables.add_numeric(make_scalar_table("c", instance.cycle_time));
  int t_id = m.tables.add_numeric(make_vector_table("t", instance.time, n));
  SetTable pred;
  pred.name = "P";
  pred.dims = {n};
  pred.object_type = 0;
  for (int v = 0; v < n; ++v) {
    IndexSet p(n);
    for (int x : instance.predecessors[v]) p.insert(x);
    pred.values.push_back(std::move(p));
  }
  int p_id = m.tables.add_set(std::move(pred));
  int w2_id = m.tables.add_numeric(make_number_table("w2", weights.w2, n));
  int w2p_id = m.tables.add_numeric(make_number_table("w2p", weights.w2p, n));
  int w3_id = m.tables.add_numeric(make_number_table("w3", weights.w3, n));

  auto U = set_var(0);
  auto r = num_var(0);

  m.target = m.blank_state();
  m.target.sets[0] = IndexSet::full(n);

  m.base_cases.push_back({cmp(Comparison::eq, card(U), num_lit(Number(0)))});

  for (int i = 0; i < n; ++i) {
    Transition assign;
    assign.name = ground_name("assign", i);
    assign.parameters = {{"i", i}};
    assign.preconditions.push_back(is_in(elem_lit(i), U));
    assign.preconditions.push_back(cmp(Comparison::eq,
                                       card(intersect(set_table(p_id, {elem_lit(i)}), U)),
                                       num_lit(Number(0))));
    assign.preconditions.push_back(cmp(Comparison::ge, r, num_table(t_id, {elem_lit(i)})));
    assign.set_effects.emplace_back(0, set_remove(elem_lit(i), U));
    assign.numeric_effects.emplace_back(0, sub(r, num_table(t_id, {elem_lit(i)})));
    assign.cost = add(num_lit(Number(0)), cost());
    m.transitions.push_back(std::move(assign));
  }
  {
    // Maximal load pruning: a new station only when no task fits, encoded as
    // forall i in U: P_i cap U != empty or t_i > r.
    Transition open;
    open.name = "open-station";
    open.forced = true;
    open.preconditions.push_back(
        forall(0, U,
               disj(cmp(Comparison::ne,
                        card(intersect(set_table(p_id, {elem_param(0)}), U)),
                        num_lit(Number(0))),
                    cmp(Comparison::gt, num_table(t_id, {elem_param(0)}), r))));
    open.numeric_effects.emplace_back(0, num_table(c_id, {}));
    open.cost = add(num_lit(Number(1)), cost());
    m.transitions.push_back(std::move(open));
  }

  m.dual_bounds = station_dual_bounds(t_id, c_id, w2_id, w2p_id, w3_id, U, r);
  return m;
}

Model build_bin_packing(const BinPackingInstance& instance, const BinPackingOptions& options) {
  int n = instance.items;
  require(n >= 0, "bin packing needs a nonnegative item count");
  require(instance.capacity > 0, "bin packing capacity must be positive");
  require(static_cast<int>(instance.size.size()) == n, "bin packing size vector mismatch");
  for (auto s : instance.size) require(s >= 0, "bin packing sizes must be nonnegative");

  Model m;
  m.reduce = Reduce::min;
  m.cost_type = CostType::integer;
  m.object_types.push_back({"items", n});
  // The bin counter can reach n when every item opens its own bin, so it
  // ranges over a type one larger than the item count.
  m.object_types.push_back({"bins", n + 1});
  m.variables.push_back({"U", VarKind::set, 0, Preference::none, 0});
  m.variables.push_back({"r", VarKind::numeric, -1, Preference::more, 0});
  m.variables.push_back({"k", VarKind::element, 1, Preference::less, 0});

  StationBoundWeights weights = station_bound_weights(instance.size, instance.capacity);
  int c_id = m.tables.add_numeric(make_scalar_table("c", instance.capacity));
  int t_id = m.tables.add_numeric(make_vector_table("t", instance.size, n));
  int w2_id = m.tables.add_numeric(make_number_table("w2", weights.w2, n));
  int w2p_id = m.tables.add_numeric(make_number_table("w2p", weights.w2p, n));
  int w3_id = m.tables.add_numeric(make_number_table("w3", weights.w3, n));

  auto U = set_var(0);
  auto r = num_var(0);
  auto k = elem_var(0);

  m.target = m.blank_state();
  m.target.sets[0] = IndexSet::full(n);

  m.base_cases.push_back({cmp(Comparison::eq, card(U), num_lit(Number(0)))});

  for (int i = 0; i < n; ++i) {
    Transition pack;
    pack.name = ground_name("pack", i);
    pack.parameters = {{"i", i}};
    pack.preconditions.push_back(is_in(elem_lit(i), U));
    pack.preconditions.push_back(cmp(Comparison::ge, r, num_table(t_id, {elem_lit(i)})));
    if (options.symmetry_breaking) {
      // Item i goes in the i-th or an earlier bin.
      pack.preconditions.push_back(
          cmp(Comparison::ge, expr::add(elem_lit(i), elem_lit(1)), k));
    }
    pack.set_effects.emplace_back(0, set_remove(elem_lit(i), U));
    pack.numeric_effects.emplace_back(0, sub(r, num_table(t_id, {elem_lit(i)})));
    pack.cost = add(num_lit(Number(0)), cost());
    m.transitions.push_back(std::move(pack));
  }
  for (int i = 0; i < n; ++i) {
    Transition open;
    open.name = ground_name("open", i);
    open.parameters = {{"i", i}};
    open.forced = options.symmetry_breaking;
    open.preconditions.push_back(forall(
        0, U,
        options.symmetry_breaking
            ? disj(cmp(Comparison::lt, r, num_table(t_id, {elem_param(0)})),
                   cmp(Comparison::lt, expr::add(elem_param(0), elem_lit(1)), k))
            : cmp(Comparison::lt, r, num_table(t_id, {elem_param(0)}))));
    open.preconditions.push_back(is_in(elem_lit(i), U));
    if (options.symmetry_breaking) {
      open.preconditions.push_back(cmp(Comparison::ge, elem_lit(i), k));
    }
    open.set_effects.emplace_back(0, set_remove(elem_lit(i), U));
    open.numeric_effects.emplace_back(0, sub(num_table(c_id, {}), num_table(t_id, {elem_lit(i)})));
    open.element_effects.emplace_back(0, expr::add(k, elem_lit(1)));
    open.cost = add(num_lit(Number(1)), cost());
    m.transitions.push_back(std::move(open));
  }

  m.dual_bounds = station_dual_bounds(t_id, c_id, w2_id, w2p_id, w3_id, U, r);
  return m;
}

Model build_mosp(const MospInstance& instance) {
  int n = instance.customers;
  require(n >= 0, "mosp needs a nonnegative customer count");
  require(instance.products >= 0, "mosp needs a nonnegative product count");
  require(static_cast<int>(instance.orders.size()) == n, "mosp order list size mismatch");
  for (const auto& row : instance.orders) {
    for (int p : row) require(p >= 0 && p < instance.products, "mosp product index out of range");
  }

  Model m;
  m.reduce = Reduce::min;
  m.cost_type = CostType::integer;
  m.object_types.push_back({"customers", n});
  m.variables.push_back({"R", VarKind::set, 0, Preference::none, 0});
  m.variables.push_back({"O", VarKind::set, 0, Preference::none, 1});

  // nc[c]: customers sharing a product with c (including c itself when it
  // orders anything).
  SetTable nc;
  nc.name = "nc";
  nc.dims = {n};
  nc.object_type = 0;
  std::vector<IndexSet> products;
  for (int c = 0; c < n; ++c) {
    IndexSet p(instance.products);
    for (int x : instance.orders[c]) p.insert(x);
    products.push_back(std::move(p));
  }
  for (int c = 0; c < n; ++c) {
    IndexSet neighbors(n);
    for (int c2 = 0; c2 < n; ++c2) {
      if (!(products[c] & products[c2]).empty()) neighbors.insert(c2);
    }
    nc.values.push_back(std::move(neighbors));
  }
  int nc_id = m.tables.add_set(std::move(nc));

  auto R = set_var(0);
  auto O = set_var(1);

  m.target = m.blank_state();
  m.target.sets[0] = IndexSet::full(n);

  m.base_cases.push_back({cmp(Comparison::eq, card(R), num_lit(Number(0)))});

  for (int c = 0; c < n; ++c) {
    Transition close;
    close.name = ground_name("close", c);
    close.parameters = {{"c", c}};
    auto nc_c = set_table(nc_id, {elem_lit(c)});
    close.preconditions.push_back(is_in(elem_lit(c), R));
    close.set_effects.emplace_back(0, set_remove(elem_lit(c), R));
    close.set_effects.emplace_back(1, unite(O, nc_c));
    close.cost = nmax(card(unite(intersect(O, R), diff(nc_c, O))), cost());
    m.transitions.push_back(std::move(close));
  }

  m.dual_bounds.push_back(num_lit(Number(0)));
  return m;
}

Model build_graph_clear(const GraphClearInstance& instance) {
  int n = instance.nodes;
  require(n >= 0, "graph-clear needs a nonnegative node count");
  require(static_cast<int>(instance.node_weight.size()) == n, "graph-clear node weight mismatch");
  for (auto a : instance.node_weight) require(a >= 0, "graph-clear node weights nonnegative");
  check_square_nonnegative(instance.edge_weight, n, "edge weight");

  Model m;
  m.reduce = Reduce::min;
  m.cost_type = CostType::integer;
  m.object_types.push_back({"nodes", n});
  m.variables.push_back({"C", VarKind::set, 0, Preference::none, 0});

  SetTable all;
  all.name = "N";
  all.object_type = 0;
  all.values.push_back(IndexSet::full(n));
  int nodes_id = m.tables.add_set(std::move(all));
  int a_id = m.tables.add_numeric(make_vector_table("a", instance.node_weight, n));
  int b_id = m.tables.add_numeric(make_matrix_table("b", n, instance.edge_weight));

  auto C = set_var(0);

  m.target = m.blank_state();
  m.base_cases.push_back({cmp(Comparison::eq, C, set_table(nodes_id, {}))});

  for (int c = 0; c < n; ++c) {
    Transition sweep;
    sweep.name = ground_name("sweep", c);
    sweep.parameters = {{"c", c}};
    sweep.preconditions.push_back(negate(is_in(elem_lit(c), C)));
    sweep.set_effects.emplace_back(0, set_add(elem_lit(c), C));
    // Robots sweeping c, blocking its incident edges, and blocking every
    // edge between the cleared side and the still contaminated side.
    auto blocked =
        add(num_table(a_id, {elem_lit(c)}),
            add(sum(b_id, {elem_lit(c), set_table(nodes_id, {})}),
                sum(b_id, {C, set_remove(elem_lit(c), set_complement(C))})));
    sweep.cost = nmax(blocked, cost());
    m.transitions.push_back(std::move(sweep));
  }

  m.dual_bounds.push_back(num_lit(Number(0)));
  return m;
}

Model build(const AnyInstance& instance) {
  return std::visit(
      [](const auto& data) -> Model {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, TsptwInstance>) {
          return build_tsptw(data);
        } else if constexpr (std::is_same_v<T, CvrpInstance>) {
          return build_cvrp(data);
        } else if constexpr (std::is_same_v<T, SalbpInstance>) {
          return build_salbp1(data);
        } else if constexpr (std::is_same_v<T, BinPackingInstance>) {
          return build_bin_packing(data);
        } else if constexpr (std::is_same_v<T, MospInstance>) {
          return build_mosp(data);
        } else {
          return build_graph_clear(data);
        }
      },
      instance.data);
}

}  // namespace didp::bench
