#pragma once

#include <string>
#include <utility>
#include <vector>

#include "didp/model.hpp"

namespace didp {

// Textual, unground representation of a YAML-DyPDL domain file. Expression
// strings are kept verbatim and parsed during grounding, when object counts
// are known. A domain can be shared by any number of problem files.

struct YamlConditionEntry {
  std::vector<std::pair<std::string, std::string>> forall;  // (binder, object type or set var)
  std::string condition;
};

struct YamlVariableDef {
  std::string name;
  std::string type;        // element | set | numeric
  std::string object;      // for element/set
  std::string preference;  // "", less, more
};

struct YamlTableDef {
  std::string name;
  std::string type;  // element | set | numeric | boolean
  std::vector<std::string> args;
  std::string object;  // value universe for element/set tables
};

struct YamlTransitionDef {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;  // (name, object type or set var)
  std::vector<YamlConditionEntry> preconditions;
  std::vector<std::pair<std::string, std::string>> effects;  // (variable, expression)
  std::string cost;
  bool forced = false;
};

struct DomainDef {
  std::vector<std::string> objects;
  std::vector<YamlVariableDef> state_variables;
  std::vector<YamlTableDef> tables;
  std::string reduce;
  std::string cost_type;
  std::vector<YamlConditionEntry> constraints;
  std::vector<std::vector<YamlConditionEntry>> base_cases;
  std::vector<YamlTransitionDef> transitions;
  std::vector<std::string> dual_bounds;
};

// Parses and schema-checks a domain file. Unknown keys, missing required
// keys (reduce, cost_type), malformed entries, and reserved or duplicate
// identifiers are ParseErrors.
DomainDef load_domain(const std::string& text);

// Canonical, deterministic YAML text; load_domain of emit_domain is a
// fixpoint.
std::string emit_domain(const DomainDef& domain);

// Parses a problem file against a domain, grounds every template, and
// returns a validated model. Missing object counts and missing table values
// without a default are GroundingErrors.
Model load_problem(const DomainDef& domain, const std::string& text);

Model load_files(const std::string& domain_path, const std::string& problem_path);

}  // namespace didp
