// YAML-DyPDL emission for the benchmark classes: one static, parameterized
// domain file per class and a generated problem file per instance. The
// domain texts mirror the programmatic builders transition for transition so
// that both load paths produce models with identical solver behavior.

#include <sstream>

#include "didp/benchmarks.hpp"
#include "didp/errors.hpp"

namespace didp::bench {

namespace {

constexpr const char* kTsptwDomain = R"yaml(objects: [customers]
state_variables:
  - {name: U, type: set, object: customers}
  - {name: i, type: element, object: customers}
  - {name: t, type: numeric, preference: less}
tables:
  - {name: a, type: numeric, args: [customers]}
  - {name: b, type: numeric, args: [customers]}
  - {name: c, type: numeric, args: [customers, customers]}
  - {name: cstar, type: numeric, args: [customers, customers]}
reduce: min
cost_type: integer
constraints:
  - forall: [{name: j, object: U}]
    condition: "(<= (+ t (cstar i j)) (b j))"
base_cases:
  - ["(= (card U) 0)", "(= i 0)"]
transitions:
  - name: visit
    parameters: [{name: j, object: U}]
    preconditions: ["(<= (+ t (c i j)) (b j))"]
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

constexpr const char* kCvrpDomain = R"yaml(objects: [customers]
state_variables:
  - {name: U, type: set, object: customers}
  - {name: i, type: element, object: customers}
  - {name: l, type: numeric, preference: less}
  - {name: k, type: numeric, preference: less}
tables:
  - {name: q, type: numeric, args: []}
  - {name: m, type: numeric, args: []}
  - {name: d, type: numeric, args: [customers]}
  - {name: c, type: numeric, args: [customers, customers]}
  - {name: cvia, type: numeric, args: [customers, customers]}
reduce: min
cost_type: integer
base_cases:
  - ["(= (card U) 0)", "(= i 0)"]
transitions:
  - name: visit
    parameters: [{name: j, object: U}]
    preconditions: ["(<= (+ l (d j)) q)"]
    effects:
      U: "(remove j U)"
      i: "j"
      l: "(+ l (d j))"
    cost: "(+ (c i j) cost)"
  - name: visit-via-depot
    parameters: [{name: j, object: U}]
    preconditions: ["(< k m)", "(<= (d j) q)"]
    effects:
      U: "(remove j U)"
      i: "j"
      l: "(d j)"
      k: "(+ k 1)"
    cost: "(+ (cvia i j) cost)"
  - name: return
    preconditions: ["(= (card U) 0)", "(!= i 0)"]
    effects:
      i: "0"
    cost: "(+ (c i 0) cost)"
dual_bounds: ["0"]
)yaml";

constexpr const char* kSalbpDomain = R"yaml(objects: [tasks]
state_variables:
  - {name: U, type: set, object: tasks}
  - {name: r, type: numeric, preference: more}
tables:
  - {name: c, type: numeric, args: []}
  - {name: t, type: numeric, args: [tasks]}
  - {name: P, type: set, args: [tasks], object: tasks}
  - {name: w2, type: numeric, args: [tasks]}
  - {name: w2p, type: numeric, args: [tasks]}
  - {name: w3, type: numeric, args: [tasks]}
reduce: min
cost_type: integer
base_cases:
  - ["(= (card U) 0)"]
transitions:
  - name: assign
    parameters: [{name: i, object: U}]
    preconditions:
      - "(= (card (intersection (P i) U)) 0)"
      - "(>= r (t i))"
    effects:
      U: "(remove i U)"
      r: "(- r (t i))"
    cost: "(+ 0 cost)"
  - name: open-station
    forced: true
    preconditions:
      - forall: [{name: i, object: U}]
        condition: "(or (!= (card (intersection (P i) U)) 0) (> (t i) r))"
    effects:
      r: "c"
    cost: "(+ 1 cost)"
dual_bounds:
  - "(ceil (/ (- (sum t U) r) c))"
  - "(- (+ (sum w2 U) (ceil (sum w2p U))) (if (>= r (/ c 2.0)) 1 0))"
  - "(- (ceil (sum w3 U)) (if (>= r (/ c 3.0)) 1 0))"
)yaml";

constexpr const char* kBinPackingDomain = R"yaml(objects: [items, bins]
state_variables:
  - {name: U, type: set, object: items}
  - {name: r, type: numeric, preference: more}
  - {name: k, type: element, object: bins, preference: less}
tables:
  - {name: c, type: numeric, args: []}
  - {name: t, type: numeric, args: [items]}
  - {name: w2, type: numeric, args: [items]}
  - {name: w2p, type: numeric, args: [items]}
  - {name: w3, type: numeric, args: [items]}
reduce: min
cost_type: integer
base_cases:
  - ["(= (card U) 0)"]
transitions:
  - name: pack
    parameters: [{name: i, object: U}]
    preconditions:
      - "(>= r (t i))"
      - "(>= (+ i 1) k)"
    effects:
      U: "(remove i U)"
      r: "(- r (t i))"
    cost: "(+ 0 cost)"
  - name: open
    forced: true
    parameters: [{name: i, object: U}]
    preconditions:
      - forall: [{name: j, object: U}]
        condition: "(or (< r (t j)) (< (+ j 1) k))"
      - "(>= i k)"
    effects:
      U: "(remove i U)"
      r: "(- c (t i))"
      k: "(+ k 1)"
    cost: "(+ 1 cost)"
dual_bounds:
  - "(ceil (/ (- (sum t U) r) c))"
  - "(- (+ (sum w2 U) (ceil (sum w2p U))) (if (>= r (/ c 2.0)) 1 0))"
  - "(- (ceil (sum w3 U)) (if (>= r (/ c 3.0)) 1 0))"
)yaml";

constexpr const char* kMospDomain = R"yaml(objects: [customers]
state_variables:
  - {name: R, type: set, object: customers}
  - {name: O, type: set, object: customers}
tables:
  - {name: nc, type: set, args: [customers], object: customers}
reduce: min
cost_type: integer
base_cases:
  - ["(= (card R) 0)"]
transitions:
  - name: close
    parameters: [{name: c, object: R}]
    effects:
      R: "(remove c R)"
      O: "(union O (nc c))"
    cost: "(max (card (union (intersection O R) (difference (nc c) O))) cost)"
dual_bounds: ["0"]
)yaml";

constexpr const char* kGraphClearDomain = R"yaml(objects: [nodes]
state_variables:
  - {name: C, type: set, object: nodes}
tables:
  - {name: N, type: set, args: [], object: nodes}
  - {name: a, type: numeric, args: [nodes]}
  - {name: b, type: numeric, args: [nodes, nodes]}
reduce: min
cost_type: integer
base_cases:
  - ["(= C N)"]
transitions:
  - name: sweep
    parameters: [{name: c, object: nodes}]
    preconditions: ["(not (is_in c C))"]
    effects:
      C: "(add c C)"
    cost: "(max (+ (a c) (+ (sum b c N) (sum b C (remove c ~C)))) cost)"
dual_bounds: ["0"]
)yaml";

void emit_int_list(std::ostringstream& out, const std::vector<std::int64_t>& values) {
  out << "[";
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? ", " : "") << values[k];
  out << "]";
}

void emit_range(std::ostringstream& out, int from, int to) {
  out << "[";
  for (int v = from; v < to; ++v) out << (v > from ? ", " : "") << v;
  out << "]";
}

void emit_matrix(std::ostringstream& out, const std::string& name,
                 const std::vector<std::vector<std::int64_t>>& matrix) {
  out << "  " << name << ":\n";
  for (const auto& row : matrix) {
    out << "    - ";
    emit_int_list(out, row);
    out << "\n";
  }
}

void emit_numbers(std::ostringstream& out, const std::string& name,
                  const std::vector<Number>& values) {
  out << "  " << name << ": [";
  for (std::size_t k = 0; k < values.size(); ++k) {
    out << (k ? ", " : "");
    // Non-integral rationals round-trip exactly as "p/q" strings.
    if (values[k].is_integer()) {
      out << values[k].str();
    } else {
      out << '"' << values[k].str() << '"';
    }
  }
  out << "]\n";
}

void emit_station_weights(std::ostringstream& out, const std::vector<std::int64_t>& times,
                          std::int64_t cycle) {
  StationBoundWeights w = station_bound_weights(times, cycle);
  emit_numbers(out, "w2", w.w2);
  emit_numbers(out, "w2p", w.w2p);
  emit_numbers(out, "w3", w.w3);
}

}  // namespace

std::string domain_yaml(ProblemClass cls) {
  switch (cls) {
    case ProblemClass::tsptw: return kTsptwDomain;
    case ProblemClass::cvrp: return kCvrpDomain;
    case ProblemClass::salbp1: return kSalbpDomain;
    case ProblemClass::bin_packing: return kBinPackingDomain;
    case ProblemClass::mosp: return kMospDomain;
    case ProblemClass::graph_clear: return kGraphClearDomain;
  }
  throw InvalidInstance("unknown problem class");
}

std::string problem_yaml(const AnyInstance& instance) {
  std::ostringstream out;
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, TsptwInstance>) {
          out << "object_numbers:\n  customers: " << inst.locations << "\n";
          out << "target:\n  U: ";
          emit_range(out, 1, inst.locations);
          out << "\n  i: 0\n  t: 0\n";
          out << "table_values:\n";
          out << "  a: ";
          emit_int_list(out, inst.window_open);
          out << "\n  b: ";
          emit_int_list(out, inst.window_close);
          out << "\n";
          emit_matrix(out, "c", inst.travel);
          emit_matrix(out, "cstar", [&] {
            if (inst.triangle) return inst.travel;
            auto cstar = inst.travel;
            int n = inst.locations;
            for (int k = 0; k < n; ++k) {
              for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                  if (cstar[i][k] + cstar[k][j] < cstar[i][j]) {
                    cstar[i][j] = cstar[i][k] + cstar[k][j];
                  }
                }
              }
            }
            return cstar;
          }());
        } else if constexpr (std::is_same_v<T, CvrpInstance>) {
          out << "object_numbers:\n  customers: " << inst.locations << "\n";
          out << "target:\n  U: ";
          emit_range(out, 1, inst.locations);
          out << "\n  i: 0\n  l: 0\n  k: 1\n";
          out << "table_values:\n";
          out << "  q: " << inst.capacity << "\n";
          out << "  m: " << inst.vehicles << "\n";
          out << "  d: ";
          emit_int_list(out, inst.demand);
          out << "\n";
          emit_matrix(out, "c", inst.travel);
          std::vector<std::vector<std::int64_t>> via(
              inst.locations, std::vector<std::int64_t>(inst.locations, 0));
          for (int a = 0; a < inst.locations; ++a) {
            for (int b = 0; b < inst.locations; ++b) {
              via[a][b] = inst.travel[a][0] + inst.travel[0][b];
            }
          }
          emit_matrix(out, "cvia", via);
        } else if constexpr (std::is_same_v<T, SalbpInstance>) {
          out << "object_numbers:\n  tasks: " << inst.tasks << "\n";
          out << "target:\n  U: ";
          emit_range(out, 0, inst.tasks);
          out << "\n  r: 0\n";
          out << "table_values:\n";
          out << "  c: " << inst.cycle_time << "\n";
          out << "  t: ";
          emit_int_list(out, inst.time);
          out << "\n  P:\n";
          for (const auto& preds : inst.predecessors) {
            out << "    - [";
            for (std::size_t k = 0; k < preds.size(); ++k) out << (k ? ", " : "") << preds[k];
            out << "]\n";
          }
          emit_station_weights(out, inst.time, inst.cycle_time);
        } else if constexpr (std::is_same_v<T, BinPackingInstance>) {
          out << "object_numbers:\n  items: " << inst.items << "\n  bins: " << inst.items + 1
              << "\n";
          out << "target:\n  U: ";
          emit_range(out, 0, inst.items);
          out << "\n  r: 0\n  k: 0\n";
          out << "table_values:\n";
          out << "  c: " << inst.capacity << "\n";
          out << "  t: ";
          emit_int_list(out, inst.size);
          out << "\n";
          emit_station_weights(out, inst.size, inst.capacity);
        } else if constexpr (std::is_same_v<T, MospInstance>) {
          out << "object_numbers:\n  customers: " << inst.customers << "\n";
          out << "target:\n  R: ";
          emit_range(out, 0, inst.customers);
          out << "\n  O: []\n";
          out << "table_values:\n  nc:\n";
          std::vector<IndexSet> products;
          for (int c = 0; c < inst.customers; ++c) {
            IndexSet p(inst.products);
            for (int x : inst.orders[c]) p.insert(x);
            products.push_back(std::move(p));
          }
          for (int c = 0; c < inst.customers; ++c) {
            out << "    - [";
            bool first = true;
            for (int c2 = 0; c2 < inst.customers; ++c2) {
              if (!(products[c] & products[c2]).empty()) {
                out << (first ? "" : ", ") << c2;
                first = false;
              }
            }
            out << "]\n";
          }
        } else {
          out << "object_numbers:\n  nodes: " << inst.nodes << "\n";
          out << "target:\n  C: []\n";
          out << "table_values:\n";
          out << "  N: ";
          emit_range(out, 0, inst.nodes);
          out << "\n  a: ";
          emit_int_list(out, inst.node_weight);
          out << "\n";
          // Only edges need entries; everything else defaults to 0.
          out << "  b:\n    default: 0\n";
          bool any_edge = false;
          for (const auto& row : inst.edge_weight) {
            for (auto w : row) any_edge |= w != 0;
          }
          if (any_edge) {
            out << "    entries:\n";
            for (int i = 0; i < inst.nodes; ++i) {
              for (int j = 0; j < inst.nodes; ++j) {
                if (inst.edge_weight[i][j] != 0) {
                  out << "      - {index: [" << i << ", " << j
                      << "], value: " << inst.edge_weight[i][j] << "}\n";
                }
              }
            }
          }
        }
      },
      instance.data);
  return out.str();
}

}  // namespace didp::bench
