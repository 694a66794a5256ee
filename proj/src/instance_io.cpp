// Plain-text instance formats. Every file starts with a header line naming
// the class and its sizes; the exact grammars are documented in the README
// and pinned by golden fixtures under tests/fixtures.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "didp/benchmarks.hpp"
#include "didp/errors.hpp"

namespace didp::bench {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty, non-comment line.
  std::string next(const std::string& what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      return line;
    }
    throw ParseError(line_number_, "unexpected end of file, expected " + what);
  }

  std::vector<std::int64_t> numbers(const std::string& what, int expected = -1) {
    std::istringstream stream(next(what));
    std::vector<std::int64_t> out;
    std::int64_t v;
    while (stream >> v) out.push_back(v);
    if (expected >= 0 && static_cast<int>(out.size()) != expected) {
      throw ParseError(line_number_, "expected " + std::to_string(expected) + " values for " +
                                         what + ", got " + std::to_string(out.size()));
    }
    return out;
  }

  int line_number() const { return line_number_; }

 private:
  std::istream& in_;
  int line_number_ = 0;
};

std::vector<std::vector<std::int64_t>> read_matrix(LineReader& reader, int n,
                                                   const std::string& what) {
  std::vector<std::vector<std::int64_t>> out;
  for (int i = 0; i < n; ++i) out.push_back(reader.numbers(what + " row", n));
  return out;
}

void write_matrix(std::ostream& out, const std::vector<std::vector<std::int64_t>>& matrix) {
  for (const auto& row : matrix) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
    out << "\n";
  }
}

std::int64_t header_value(LineReader& reader, std::istringstream& stream,
                          const std::string& what) {
  std::int64_t v;
  if (!(stream >> v)) throw ParseError(reader.line_number(), "header is missing " + what);
  return v;
}

}  // namespace

AnyInstance read_instance(ProblemClass cls, std::istream& in) {
  LineReader reader(in);
  std::istringstream header(reader.next("header"));
  std::string name;
  header >> name;
  if (name != to_string(cls)) {
    throw ParseError(reader.line_number(),
                     "header names class '" + name + "', expected '" + to_string(cls) + "'");
  }
  switch (cls) {
    case ProblemClass::tsptw: {
      TsptwInstance inst;
      inst.locations = static_cast<int>(header_value(reader, header, "location count"));
      inst.triangle = header_value(reader, header, "triangle flag") != 0;
      inst.travel = read_matrix(reader, inst.locations, "travel");
      for (int i = 0; i < inst.locations; ++i) {
        auto w = reader.numbers("time window", 2);
        inst.window_open.push_back(w[0]);
        inst.window_close.push_back(w[1]);
      }
      return {cls, std::move(inst)};
    }
    case ProblemClass::cvrp: {
      CvrpInstance inst;
      inst.locations = static_cast<int>(header_value(reader, header, "location count"));
      inst.vehicles = static_cast<int>(header_value(reader, header, "vehicle count"));
      inst.capacity = header_value(reader, header, "capacity");
      inst.demand = reader.numbers("demands", inst.locations);
      inst.travel = read_matrix(reader, inst.locations, "travel");
      return {cls, std::move(inst)};
    }
    case ProblemClass::salbp1: {
      SalbpInstance inst;
      inst.tasks = static_cast<int>(header_value(reader, header, "task count"));
      inst.cycle_time = header_value(reader, header, "cycle time");
      inst.time = reader.numbers("task times", inst.tasks);
      for (int i = 0; i < inst.tasks; ++i) {
        // Per task: predecessor count followed by the predecessor indices.
        auto row = reader.numbers("predecessors of task " + std::to_string(i));
        if (row.empty() || static_cast<int>(row.size()) != row[0] + 1) {
          throw ParseError(reader.line_number(), "malformed predecessor list");
        }
        inst.predecessors.emplace_back(row.begin() + 1, row.end());
      }
      return {cls, std::move(inst)};
    }
    case ProblemClass::bin_packing: {
      BinPackingInstance inst;
      inst.items = static_cast<int>(header_value(reader, header, "item count"));
      inst.capacity = header_value(reader, header, "capacity");
      inst.size = reader.numbers("item sizes", inst.items);
      return {cls, std::move(inst)};
    }
    case ProblemClass::mosp: {
      MospInstance inst;
      inst.customers = static_cast<int>(header_value(reader, header, "customer count"));
      inst.products = static_cast<int>(header_value(reader, header, "product count"));
      for (int c = 0; c < inst.customers; ++c) {
        auto row = reader.numbers("orders of customer " + std::to_string(c));
        if (row.empty() || static_cast<int>(row.size()) != row[0] + 1) {
          throw ParseError(reader.line_number(), "malformed order list");
        }
        inst.orders.emplace_back(row.begin() + 1, row.end());
      }
      return {cls, std::move(inst)};
    }
    case ProblemClass::graph_clear: {
      GraphClearInstance inst;
      inst.nodes = static_cast<int>(header_value(reader, header, "node count"));
      std::int64_t edges = header_value(reader, header, "edge count");
      inst.node_weight = reader.numbers("node weights", inst.nodes);
      inst.edge_weight.assign(inst.nodes, std::vector<std::int64_t>(inst.nodes, 0));
      for (std::int64_t e = 0; e < edges; ++e) {
        auto row = reader.numbers("edge", 3);
        if (row[0] < 0 || row[0] >= inst.nodes || row[1] < 0 || row[1] >= inst.nodes) {
          throw ParseError(reader.line_number(), "edge endpoint out of range");
        }
        inst.edge_weight[row[0]][row[1]] = row[2];
        inst.edge_weight[row[1]][row[0]] = row[2];
      }
      return {cls, std::move(inst)};
    }
  }
  throw InvalidInstance("unknown problem class");
}

AnyInstance read_instance_file(ProblemClass cls, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_instance(cls, in);
}

void write_instance(const AnyInstance& instance, std::ostream& out) {
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, TsptwInstance>) {
          out << "tsptw " << inst.locations << " " << (inst.triangle ? 1 : 0) << "\n";
          write_matrix(out, inst.travel);
          for (int i = 0; i < inst.locations; ++i) {
            out << inst.window_open[i] << " " << inst.window_close[i] << "\n";
          }
        } else if constexpr (std::is_same_v<T, CvrpInstance>) {
          out << "cvrp " << inst.locations << " " << inst.vehicles << " " << inst.capacity
              << "\n";
          for (int i = 0; i < inst.locations; ++i) out << (i ? " " : "") << inst.demand[i];
          out << "\n";
          write_matrix(out, inst.travel);
        } else if constexpr (std::is_same_v<T, SalbpInstance>) {
          out << "salbp1 " << inst.tasks << " " << inst.cycle_time << "\n";
          for (int i = 0; i < inst.tasks; ++i) out << (i ? " " : "") << inst.time[i];
          out << "\n";
          for (const auto& preds : inst.predecessors) {
            out << preds.size();
            for (int p : preds) out << " " << p;
            out << "\n";
          }
        } else if constexpr (std::is_same_v<T, BinPackingInstance>) {
          out << "bin_packing " << inst.items << " " << inst.capacity << "\n";
          for (int i = 0; i < inst.items; ++i) out << (i ? " " : "") << inst.size[i];
          out << "\n";
        } else if constexpr (std::is_same_v<T, MospInstance>) {
          out << "mosp " << inst.customers << " " << inst.products << "\n";
          for (const auto& orders : inst.orders) {
            out << orders.size();
            for (int p : orders) out << " " << p;
            out << "\n";
          }
        } else {
          int edges = 0;
          for (int i = 0; i < inst.nodes; ++i) {
            for (int j = i + 1; j < inst.nodes; ++j) {
              if (inst.edge_weight[i][j] != 0) ++edges;
            }
          }
          out << "graph_clear " << inst.nodes << " " << edges << "\n";
          for (int i = 0; i < inst.nodes; ++i) out << (i ? " " : "") << inst.node_weight[i];
          out << "\n";
          for (int i = 0; i < inst.nodes; ++i) {
            for (int j = i + 1; j < inst.nodes; ++j) {
              if (inst.edge_weight[i][j] != 0) {
                out << i << " " << j << " " << inst.edge_weight[i][j] << "\n";
              }
            }
          }
        }
      },
      instance.data);
}

}  // namespace didp::bench
