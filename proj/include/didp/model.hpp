#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "didp/expression.hpp"
#include "didp/state.hpp"
#include "didp/table.hpp"

namespace didp {

enum class Reduce { min, max };
enum class CostType { integer, continuous };
enum class VarKind { element, set, numeric };
enum class Preference { none, less, more };

struct ObjectType {
  std::string name;
  int count = 0;
};

// A declared state variable. `index` is the per-kind position inside State.
// Element and numeric variables may carry a preference, which makes them
// resource variables and induces the dominance relation.
struct VariableDecl {
  std::string name;
  VarKind kind = VarKind::element;
  int object_type = -1;  // for element/set variables
  Preference preference = Preference::none;
  int index = 0;

  bool is_resource() const { return preference != Preference::none; }
};

// A ground transition: simultaneous effects evaluated against the source
// state, a cost expression over V(S[[tau]]), preconditions, and the forced
// flag. Definition order is the position in Model::transitions.
struct Transition {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::vector<ConditionPtr> preconditions;
  std::vector<std::pair<int, SetPtr>> set_effects;
  std::vector<std::pair<int, ElementPtr>> element_effects;
  std::vector<std::pair<int, NumericPtr>> numeric_effects;
  NumericPtr cost;
  bool forced = false;
};

struct Model {
  Reduce reduce = Reduce::min;
  CostType cost_type = CostType::integer;
  std::vector<ObjectType> object_types;
  std::vector<VariableDecl> variables;  // declaration order across kinds
  TableRegistry tables;
  State target;
  std::vector<Transition> transitions;
  std::vector<std::vector<ConditionPtr>> base_cases;  // each is a condition set
  std::vector<ConditionPtr> state_constraints;
  std::vector<NumericPtr> dual_bounds;

  int find_object_type(const std::string& name) const;
  const VariableDecl* find_variable(const std::string& name) const;
  const VariableDecl* variable_of(VarKind kind, int index) const;
  int count_variables(VarKind kind) const;

  // An empty state shaped to the declarations (sets sized to their types).
  State blank_state() const;
};

enum class DominanceOutcome { left_dominates, right_dominates, equal, incomparable };

// Definition-order indices of the transitions applicable in `state`. If any
// forced transition's preconditions hold, the first such transition is the
// only result.
std::vector<int> applicable_transitions(const Model& model, const State& state);

bool transition_applicable(const Model& model, const Transition& t, const State& state);

// Applies all effects simultaneously against the original state.
State apply(const Model& model, const Transition& t, const State& state);

bool is_base(const Model& model, const State& state);
bool check_constraints(const Model& model, const State& state);

// Compares two states of the same model. Only states agreeing on every
// non-resource variable are comparable; the left dominates when each of its
// resource variables is weakly better and the states are not identical.
DominanceOutcome dominance(const Model& model, const State& a, const State& b);

// Max (minimization) or min (maximization) over the declared dual bounds,
// clamped at the algebra identity from below for minimization. With no
// declared bound this is the identity.
Number dual_bound(const Model& model, const State& state);

struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity;
  std::string message;
};

// Structural checks: full target assignment, expression sanity (table ids,
// arities, variable indices, set universes), cost placeholder usage. Errors
// make the model unusable; warnings flag suspicious but legal constructs.
std::vector<Diagnostic> validate_model(const Model& model);

inline bool is_valid(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity == Diagnostic::Severity::error) return false;
  }
  return true;
}

// Copy of the model with every preference erased (turns dominance pruning
// into plain duplicate detection).
Model erase_preferences(const Model& model);

}  // namespace didp
