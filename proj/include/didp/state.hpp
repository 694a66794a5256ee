#pragma once

#include <cstdint>
#include <vector>

#include "didp/index_set.hpp"
#include "didp/number.hpp"

namespace didp {

// One full assignment to the declared state variables, grouped by kind and
// indexed by each variable's per-kind index. Value-semantic and immutable by
// convention once handed to the solver.
struct State {
  std::vector<IndexSet> sets;
  std::vector<std::int64_t> elements;
  std::vector<Number> numerics;

  friend bool operator==(const State& a, const State& b) {
    if (a.elements != b.elements) return false;
    if (a.sets != b.sets) return false;
    if (a.numerics.size() != b.numerics.size()) return false;
    for (std::size_t k = 0; k < a.numerics.size(); ++k) {
      if (a.numerics[k] != b.numerics[k]) return false;
    }
    return true;
  }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }
};

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::size_t h = 0x811c9dc5;
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& set : s.sets) mix(set.hash());
    for (auto e : s.elements) mix(std::hash<std::int64_t>{}(e));
    for (const auto& n : s.numerics) mix(n.hash());
    return h;
  }
};

}  // namespace didp
