#pragma once

// Shared fixtures for the unit suites: a tiny model with one set, one
// element, and one numeric variable over three objects, plus a deterministic
// PRNG for property-style checks.

#include <cstdint>
#include <vector>

#include "didp/model.hpp"

namespace testing {

inline std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::int64_t rand_range(std::uint64_t& state, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(splitmix(state) % static_cast<std::uint64_t>(hi - lo + 1));
}

// Three objects; variables U (set), i (element), t (numeric); numeric
// tables tv = [2, 3, 5] and m (3x3, m[r][c] = 10r + c); set table ns with
// ns[k] = {k, (k+1) mod 3}.
inline didp::Model tiny_model() {
  using namespace didp;
  Model m;
  m.object_types.push_back({"obj", 3});
  m.variables.push_back({"U", VarKind::set, 0, Preference::none, 0});
  m.variables.push_back({"i", VarKind::element, 0, Preference::none, 0});
  m.variables.push_back({"t", VarKind::numeric, -1, Preference::none, 0});

  NumericTable tv;
  tv.name = "tv";
  tv.dims = {3};
  tv.values = {Number(2), Number(3), Number(5)};
  m.tables.add_numeric(std::move(tv));

  NumericTable mat;
  mat.name = "m";
  mat.dims = {3, 3};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) mat.values.push_back(Number(10 * r + c));
  }
  m.tables.add_numeric(std::move(mat));

  SetTable ns;
  ns.name = "ns";
  ns.dims = {3};
  ns.object_type = 0;
  for (int k = 0; k < 3; ++k) {
    IndexSet s(3);
    s.insert(k);
    s.insert((k + 1) % 3);
    ns.values.push_back(std::move(s));
  }
  m.tables.add_set(std::move(ns));

  m.target = m.blank_state();
  return m;
}

inline didp::State state_of(const didp::Model& m, std::initializer_list<int> set_members,
                            std::int64_t element, didp::Number numeric) {
  didp::State s = m.blank_state();
  for (int v : set_members) s.sets[0].insert(v);
  s.elements[0] = element;
  s.numerics[0] = numeric;
  return s;
}

}  // namespace testing
