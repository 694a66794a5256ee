#include "didp/yaml_frontend.hpp"

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "didp/errors.hpp"
#include "didp/parser.hpp"

namespace didp {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw ParseError(path + ": " + reason);
}

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {
      "cost", "true",  "false",        "set",        "sum",    "if",   "forall",
      "min",  "max",   "card",         "not",        "and",    "or",   "union",
      "add",  "remove", "complement",  "difference", "is_in",  "ceil", "floor",
      "intersection",  "is_subset"};
  return words;
}

void check_identifier(const std::string& name, const std::string& path) {
  if (!is_identifier(name)) fail(path, "'" + name + "' is not a valid identifier");
  if (reserved_words().count(name)) fail(path, "'" + name + "' is a reserved word");
}

void check_keys(const YAML::Node& node, const std::set<std::string>& allowed,
                const std::string& path) {
  if (!node.IsMap()) fail(path, "expected a mapping");
  for (const auto& kv : node) {
    std::string key = kv.first.as<std::string>();
    if (!allowed.count(key)) fail(path, "unknown key '" + key + "'");
  }
}

std::string scalar(const YAML::Node& node, const std::string& path) {
  if (!node.IsScalar()) fail(path, "expected a scalar");
  return node.Scalar();
}

std::string required_scalar(const YAML::Node& parent, const std::string& key,
                            const std::string& path) {
  if (!parent[key]) fail(path, "missing required key '" + key + "'");
  return scalar(parent[key], path + "." + key);
}

std::int64_t as_int(const YAML::Node& node, const std::string& path) {
  std::string s = scalar(node, path);
  try {
    std::size_t used = 0;
    std::int64_t value = std::stoll(s, &used);
    if (used != s.size()) fail(path, "'" + s + "' is not an integer");
    return value;
  } catch (const std::exception&) {
    fail(path, "'" + s + "' is not an integer");
  }
}

// Numeric scalars: integers, decimals (exact rationals in integer models,
// doubles in continuous models), and exact "p/q" fractions.
Number as_number(const YAML::Node& node, CostType cost_type, const std::string& path) {
  std::string s = scalar(node, path);
  ParseContext ctx;
  ctx.cost_type = cost_type;
  try {
    NumericPtr parsed = parse_numeric(s, ctx);
    if (const auto* lit = std::get_if<NumericExpr::Literal>(&parsed->node)) {
      return lit->value;
    }
  } catch (const ParseError&) {
  }
  fail(path, "'" + s + "' is not a number");
}

YamlConditionEntry parse_condition_entry(const YAML::Node& node, const std::string& path) {
  YamlConditionEntry entry;
  if (node.IsScalar()) {
    entry.condition = node.Scalar();
    return entry;
  }
  check_keys(node, {"forall", "condition"}, path);
  if (!node["forall"] || !node["condition"]) {
    fail(path, "a condition entry is a string or {forall, condition}");
  }
  const YAML::Node& params = node["forall"];
  if (!params.IsSequence()) fail(path + ".forall", "expected a sequence");
  for (std::size_t k = 0; k < params.size(); ++k) {
    std::string p = path + ".forall[" + std::to_string(k) + "]";
    check_keys(params[k], {"name", "object"}, p);
    entry.forall.emplace_back(required_scalar(params[k], "name", p),
                              required_scalar(params[k], "object", p));
  }
  entry.condition = scalar(node["condition"], path + ".condition");
  return entry;
}

std::vector<YamlConditionEntry> parse_condition_list(const YAML::Node& node,
                                                     const std::string& path) {
  std::vector<YamlConditionEntry> out;
  if (!node || node.IsNull()) return out;
  if (!node.IsSequence()) fail(path, "expected a sequence");
  for (std::size_t k = 0; k < node.size(); ++k) {
    out.push_back(parse_condition_entry(node[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<YamlTransitionDef> parse_transitions(const YAML::Node& node, const std::string& path) {
  std::vector<YamlTransitionDef> out;
  if (!node || node.IsNull()) return out;
  if (!node.IsSequence()) fail(path, "expected a sequence");
  for (std::size_t k = 0; k < node.size(); ++k) {
    std::string p = path + "[" + std::to_string(k) + "]";
    const YAML::Node& t = node[k];
    check_keys(t, {"name", "parameters", "preconditions", "effects", "cost", "forced"}, p);
    YamlTransitionDef def;
    def.name = required_scalar(t, "name", p);
    if (t["parameters"]) {
      if (!t["parameters"].IsSequence()) fail(p + ".parameters", "expected a sequence");
      for (std::size_t j = 0; j < t["parameters"].size(); ++j) {
        std::string pp = p + ".parameters[" + std::to_string(j) + "]";
        check_keys(t["parameters"][j], {"name", "object"}, pp);
        std::string name = required_scalar(t["parameters"][j], "name", pp);
        check_identifier(name, pp);
        def.parameters.emplace_back(name, required_scalar(t["parameters"][j], "object", pp));
      }
    }
    def.preconditions = parse_condition_list(t["preconditions"], p + ".preconditions");
    if (t["effects"]) {
      if (!t["effects"].IsMap()) fail(p + ".effects", "expected a mapping");
      for (const auto& kv : t["effects"]) {
        def.effects.emplace_back(kv.first.as<std::string>(),
                                 scalar(kv.second, p + ".effects"));
      }
    }
    def.cost = required_scalar(t, "cost", p);
    if (t["forced"]) {
      std::string forced = scalar(t["forced"], p + ".forced");
      if (forced != "true" && forced != "false") fail(p + ".forced", "expected true or false");
      def.forced = forced == "true";
    }
    out.push_back(std::move(def));
  }
  return out;
}

std::vector<std::string> parse_string_list(const YAML::Node& node, const std::string& path) {
  std::vector<std::string> out;
  if (!node || node.IsNull()) return out;
  if (!node.IsSequence()) fail(path, "expected a sequence");
  for (std::size_t k = 0; k < node.size(); ++k) {
    out.push_back(scalar(node[k], path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

YAML::Node load_yaml(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("invalid YAML: ") + e.what());
  }
}

}  // namespace

DomainDef load_domain(const std::string& text) {
  YAML::Node root = load_yaml(text);
  check_keys(root,
             {"objects", "state_variables", "tables", "reduce", "cost_type", "constraints",
              "base_cases", "transitions", "dual_bounds"},
             "domain");

  DomainDef domain;
  if (root["objects"]) {
    if (!root["objects"].IsSequence()) fail("domain.objects", "expected a sequence");
    for (std::size_t k = 0; k < root["objects"].size(); ++k) {
      std::string name = scalar(root["objects"][k], "domain.objects");
      check_identifier(name, "domain.objects");
      for (const auto& seen : domain.objects) {
        if (seen == name) fail("domain.objects", "duplicate object type '" + name + "'");
      }
      domain.objects.push_back(name);
    }
  }

  auto known_object = [&](const std::string& name) {
    for (const auto& o : domain.objects) {
      if (o == name) return true;
    }
    return false;
  };

  if (root["state_variables"]) {
    if (!root["state_variables"].IsSequence()) {
      fail("domain.state_variables", "expected a sequence");
    }
    for (std::size_t k = 0; k < root["state_variables"].size(); ++k) {
      std::string p = "domain.state_variables[" + std::to_string(k) + "]";
      const YAML::Node& v = root["state_variables"][k];
      check_keys(v, {"name", "type", "object", "preference"}, p);
      YamlVariableDef def;
      def.name = required_scalar(v, "name", p);
      check_identifier(def.name, p);
      def.type = required_scalar(v, "type", p);
      if (def.type != "element" && def.type != "set" && def.type != "numeric") {
        fail(p, "variable type must be element, set, or numeric");
      }
      if (v["object"]) def.object = scalar(v["object"], p + ".object");
      if (def.type != "numeric") {
        if (def.object.empty()) fail(p, "element/set variables need an object type");
        if (!known_object(def.object)) fail(p, "unknown object type '" + def.object + "'");
      }
      if (v["preference"]) {
        def.preference = scalar(v["preference"], p + ".preference");
        if (def.preference != "less" && def.preference != "more") {
          fail(p, "preference must be less or more");
        }
        if (def.type == "set") fail(p, "set variables cannot carry a preference");
      }
      for (const auto& seen : domain.state_variables) {
        if (seen.name == def.name) fail(p, "duplicate variable name '" + def.name + "'");
      }
      domain.state_variables.push_back(std::move(def));
    }
  }

  if (root["tables"]) {
    if (!root["tables"].IsSequence()) fail("domain.tables", "expected a sequence");
    for (std::size_t k = 0; k < root["tables"].size(); ++k) {
      std::string p = "domain.tables[" + std::to_string(k) + "]";
      const YAML::Node& t = root["tables"][k];
      check_keys(t, {"name", "type", "args", "object"}, p);
      YamlTableDef def;
      def.name = required_scalar(t, "name", p);
      check_identifier(def.name, p);
      def.type = required_scalar(t, "type", p);
      if (def.type != "element" && def.type != "set" && def.type != "numeric" &&
          def.type != "boolean") {
        fail(p, "table type must be element, set, numeric, or boolean");
      }
      def.args = parse_string_list(t["args"], p + ".args");
      for (const auto& arg : def.args) {
        if (!known_object(arg)) fail(p, "unknown object type '" + arg + "' in args");
      }
      if (t["object"]) def.object = scalar(t["object"], p + ".object");
      if (def.type == "element" || def.type == "set") {
        if (def.object.empty()) fail(p, "element/set tables need an object type");
        if (!known_object(def.object)) fail(p, "unknown object type '" + def.object + "'");
      }
      for (const auto& seen : domain.tables) {
        if (seen.name == def.name) fail(p, "duplicate table name '" + def.name + "'");
      }
      for (const auto& var : domain.state_variables) {
        if (var.name == def.name) fail(p, "table '" + def.name + "' collides with a variable");
      }
      domain.tables.push_back(std::move(def));
    }
  }

  domain.reduce = required_scalar(root, "reduce", "domain");
  if (domain.reduce != "min" && domain.reduce != "max") {
    fail("domain.reduce", "must be min or max");
  }
  domain.cost_type = required_scalar(root, "cost_type", "domain");
  if (domain.cost_type != "integer" && domain.cost_type != "continuous") {
    fail("domain.cost_type", "must be integer or continuous");
  }

  domain.constraints = parse_condition_list(root["constraints"], "domain.constraints");
  if (root["base_cases"]) {
    if (!root["base_cases"].IsSequence()) fail("domain.base_cases", "expected a sequence");
    for (std::size_t k = 0; k < root["base_cases"].size(); ++k) {
      domain.base_cases.push_back(parse_condition_list(
          root["base_cases"][k], "domain.base_cases[" + std::to_string(k) + "]"));
    }
  }
  domain.transitions = parse_transitions(root["transitions"], "domain.transitions");
  domain.dual_bounds = parse_string_list(root["dual_bounds"], "domain.dual_bounds");
  return domain;
}

namespace {

// --- grounding ----------------------------------------------------------

struct Grounder {
  Model& model;

  ParseContext context() const {
    ParseContext ctx;
    ctx.object_types = &model.object_types;
    ctx.variables = &model.variables;
    ctx.tables = &model.tables;
    ctx.cost_type = model.cost_type;
    return ctx;
  }

  // Expands one condition entry. Parameters over object types multiply into
  // ground conjuncts; parameters over set variables become evaluation-time
  // quantifiers (their value depends on the state).
  std::vector<ConditionPtr> expand_condition(const YamlConditionEntry& entry,
                                             const std::string& path) {
    std::vector<ConditionPtr> out;
    ParseContext ctx = context();
    expand_condition_rec(entry, 0, ctx, out, path);
    return out;
  }

  void expand_condition_rec(const YamlConditionEntry& entry, std::size_t param_index,
                            ParseContext& ctx, std::vector<ConditionPtr>& out,
                            const std::string& path) {
    if (param_index == entry.forall.size()) {
      ConditionPtr parsed = parse_text_condition(entry.condition, ctx, path);
      // Wrap evaluation-time binders innermost first.
      for (int slot = static_cast<int>(ctx.slot_params.size()) - 1; slot >= 0; --slot) {
        const VariableDecl* var = model.find_variable(slot_domains[slot]);
        parsed = expr::forall(slot, expr::set_var(var->index), parsed);
      }
      out.push_back(parsed);
      return;
    }
    const auto& [name, object] = entry.forall[param_index];
    int type_index = model.find_object_type(object);
    if (type_index >= 0) {
      int count = model.object_types[type_index].count;
      for (int v = 0; v < count; ++v) {
        ctx.ground_params.emplace_back(name, v);
        expand_condition_rec(entry, param_index + 1, ctx, out, path);
        ctx.ground_params.pop_back();
      }
      return;
    }
    const VariableDecl* var = model.find_variable(object);
    if (var != nullptr && var->kind == VarKind::set) {
      ctx.slot_params.push_back(name);
      slot_domains.push_back(object);
      expand_condition_rec(entry, param_index + 1, ctx, out, path);
      slot_domains.pop_back();
      ctx.slot_params.pop_back();
      return;
    }
    throw GroundingError(path + ": unknown parameter universe '" + object + "'");
  }

  ConditionPtr parse_text_condition(const std::string& text, const ParseContext& ctx,
                                    const std::string& path) {
    try {
      return parse_condition(text, ctx);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.reason + " in \"" + text + "\"");
    }
  }

  // Expands a transition template over its parameters, ascending index
  // order per parameter, outer parameter first.
  void expand_transition(const YamlTransitionDef& def, const std::string& path) {
    std::vector<std::pair<std::string, std::int64_t>> bound;
    expand_transition_rec(def, 0, bound, path);
  }

  void expand_transition_rec(const YamlTransitionDef& def, std::size_t param_index,
                             std::vector<std::pair<std::string, std::int64_t>>& bound,
                             const std::string& path) {
    if (param_index == def.parameters.size()) {
      emit_ground_transition(def, bound, path);
      return;
    }
    const auto& [name, object] = def.parameters[param_index];
    int type_index = model.find_object_type(object);
    const VariableDecl* set_var_decl = nullptr;
    if (type_index < 0) {
      set_var_decl = model.find_variable(object);
      if (set_var_decl == nullptr || set_var_decl->kind != VarKind::set) {
        throw GroundingError(path + ": unknown parameter universe '" + object + "'");
      }
      type_index = set_var_decl->object_type;
    }
    int count = model.object_types[type_index].count;
    for (int v = 0; v < count; ++v) {
      bound.emplace_back(name, v);
      expand_transition_rec(def, param_index + 1, bound, path);
      bound.pop_back();
    }
  }

  void emit_ground_transition(const YamlTransitionDef& def,
                              const std::vector<std::pair<std::string, std::int64_t>>& bound,
                              const std::string& path) {
    Transition t;
    t.name = def.name;
    for (const auto& [name, value] : bound) t.name += " " + std::to_string(value);
    t.parameters = bound;
    t.forced = def.forced;

    ParseContext ctx = context();
    ctx.ground_params = bound;

    // Parameters drawn from a set variable assume the membership
    // precondition.
    for (std::size_t k = 0; k < def.parameters.size(); ++k) {
      const auto& [name, object] = def.parameters[k];
      const VariableDecl* var = model.find_variable(object);
      if (var != nullptr && var->kind == VarKind::set) {
        t.preconditions.push_back(
            expr::is_in(expr::elem_lit(bound[k].second), expr::set_var(var->index)));
      }
    }
    for (const auto& entry : def.preconditions) {
      std::vector<ConditionPtr> conds;
      expand_condition_with(entry, ctx, conds, path);
      for (auto& c : conds) t.preconditions.push_back(std::move(c));
    }
    for (const auto& [var_name, text] : def.effects) {
      const VariableDecl* var = model.find_variable(var_name);
      if (var == nullptr) {
        throw ParseError(path + ": effect on unknown variable '" + var_name + "'");
      }
      try {
        switch (var->kind) {
          case VarKind::set:
            t.set_effects.emplace_back(var->index, parse_set(text, ctx));
            break;
          case VarKind::element:
            t.element_effects.emplace_back(var->index, parse_element(text, ctx));
            break;
          case VarKind::numeric:
            t.numeric_effects.emplace_back(var->index, parse_numeric(text, ctx));
            break;
        }
      } catch (const ParseError& e) {
        throw ParseError(path + ".effects." + var_name + ": " + e.reason);
      }
    }
    try {
      t.cost = parse_numeric(def.cost, ctx);
    } catch (const ParseError& e) {
      throw ParseError(path + ".cost: " + e.reason);
    }
    model.transitions.push_back(std::move(t));
  }

  // Like expand_condition but under an existing ground-parameter context.
  void expand_condition_with(const YamlConditionEntry& entry, ParseContext& ctx,
                             std::vector<ConditionPtr>& out, const std::string& path) {
    slot_domains.clear();
    expand_condition_rec(entry, 0, ctx, out, path);
  }

  std::vector<std::string> slot_domains;  // set-variable name per active slot
};

// Fills a table from one of the three supported value layouts: a plain
// scalar (arity 0), dense nested lists, or {default, entries}.
template <class Table, class ParseValue, class Value>
void fill_table(Table& table, const YAML::Node& node, const std::vector<int>& dims,
                std::size_t total, const std::string& path, ParseValue&& parse_value,
                Value default_value) {
  if (dims.empty()) {
    table.values.push_back(parse_value(node, path));
    return;
  }
  if (node.IsSequence()) {
    table.values.assign(total, default_value);
    std::function<void(const YAML::Node&, std::size_t, std::size_t, const std::string&)> walk =
        [&](const YAML::Node& n, std::size_t depth, std::size_t offset, const std::string& p) {
          if (!n.IsSequence() || static_cast<int>(n.size()) != dims[depth]) {
            fail(p, "expected a list of length " + std::to_string(dims[depth]));
          }
          std::size_t stride = 1;
          for (std::size_t d = depth + 1; d < dims.size(); ++d) {
            stride *= static_cast<std::size_t>(dims[d]);
          }
          for (std::size_t k = 0; k < n.size(); ++k) {
            std::string q = p + "[" + std::to_string(k) + "]";
            if (depth + 1 == dims.size()) {
              table.values[offset + k] = parse_value(n[k], q);
            } else {
              walk(n[k], depth + 1, offset + k * stride, q);
            }
          }
        };
    walk(node, 0, 0, path);
    return;
  }
  if (node.IsMap()) {
    check_keys(node, {"default", "entries"}, path);
    bool has_default = static_cast<bool>(node["default"]);
    Value def_value = default_value;
    if (has_default) def_value = parse_value(node["default"], path + ".default");
    table.values.assign(total, def_value);
    std::size_t provided = 0;
    if (node["entries"] && !node["entries"].IsNull()) {
      if (!node["entries"].IsSequence()) fail(path + ".entries", "expected a sequence");
      for (std::size_t k = 0; k < node["entries"].size(); ++k) {
        std::string p = path + ".entries[" + std::to_string(k) + "]";
        check_keys(node["entries"][k], {"index", "value"}, p);
        const YAML::Node& index = node["entries"][k]["index"];
        if (!index || !index.IsSequence() || index.size() != dims.size()) {
          fail(p, "index must list one value per dimension");
        }
        std::vector<std::int64_t> idx;
        for (std::size_t d = 0; d < index.size(); ++d) {
          idx.push_back(as_int(index[d], p + ".index"));
        }
        const YAML::Node& value = node["entries"][k]["value"];
        if (!value) fail(p, "missing value");
        try {
          table.values[table.flat_index(idx)] = parse_value(value, p + ".value");
        } catch (const EvalError& e) {
          fail(p, e.what());
        }
        ++provided;
      }
    }
    if (!has_default && provided < total) {
      throw GroundingError(path + ": entries are missing and no default is given");
    }
    return;
  }
  fail(path, "table values must be a scalar, nested lists, or {default, entries}");
}

}  // namespace

Model load_problem(const DomainDef& domain, const std::string& text) {
  YAML::Node root = load_yaml(text);
  check_keys(root,
             {"object_numbers", "target", "table_values", "constraints", "base_cases",
              "transitions", "dual_bounds"},
             "problem");

  Model model;
  model.reduce = domain.reduce == "min" ? Reduce::min : Reduce::max;
  model.cost_type = domain.cost_type == "integer" ? CostType::integer : CostType::continuous;

  // Object counts: every declared type needs one.
  if (!root["object_numbers"] && !domain.objects.empty()) {
    throw GroundingError("problem: missing object_numbers");
  }
  if (root["object_numbers"]) {
    check_keys(root["object_numbers"],
               std::set<std::string>(domain.objects.begin(), domain.objects.end()),
               "problem.object_numbers");
  }
  for (const auto& name : domain.objects) {
    const YAML::Node& node = root["object_numbers"][name];
    if (!node) {
      throw GroundingError("problem.object_numbers: no count for object type '" + name + "'");
    }
    std::int64_t count = as_int(node, "problem.object_numbers." + name);
    if (count < 0) fail("problem.object_numbers." + name, "count must be nonnegative");
    model.object_types.push_back({name, static_cast<int>(count)});
  }

  // Variables, with per-kind indices in declaration order.
  int set_count = 0, element_count = 0, numeric_count = 0;
  for (const auto& def : domain.state_variables) {
    VariableDecl decl;
    decl.name = def.name;
    decl.kind = def.type == "set" ? VarKind::set
                : def.type == "element" ? VarKind::element
                                        : VarKind::numeric;
    decl.object_type = def.object.empty() ? -1 : model.find_object_type(def.object);
    decl.preference = def.preference == "less" ? Preference::less
                      : def.preference == "more" ? Preference::more
                                                 : Preference::none;
    decl.index = decl.kind == VarKind::set ? set_count++
                 : decl.kind == VarKind::element ? element_count++
                                                 : numeric_count++;
    model.variables.push_back(std::move(decl));
  }

  // Tables.
  const YAML::Node& values_root = root["table_values"];
  for (const auto& def : domain.tables) {
    std::string path = "problem.table_values." + def.name;
    const YAML::Node node = values_root ? values_root[def.name] : YAML::Node(YAML::NodeType::Undefined);
    if (!node) {
      throw GroundingError(path + ": no values for declared table");
    }
    std::vector<int> dims;
    for (const auto& arg : def.args) {
      dims.push_back(model.object_types[model.find_object_type(arg)].count);
    }
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    int value_type = def.object.empty() ? -1 : model.find_object_type(def.object);
    int universe = value_type >= 0 ? model.object_types[value_type].count : 0;

    auto parse_set_value = [&](const YAML::Node& v, const std::string& p) {
      if (!v.IsSequence()) fail(p, "set values are lists of indices");
      IndexSet s(universe);
      for (std::size_t k = 0; k < v.size(); ++k) {
        std::int64_t member = as_int(v[k], p);
        if (member < 0 || member >= universe) fail(p, "set member out of range");
        s.insert(member);
      }
      return s;
    };
    auto parse_element_value = [&](const YAML::Node& v, const std::string& p) {
      std::int64_t value = as_int(v, p);
      if (value < 0 || value >= universe) fail(p, "element value out of range");
      return value;
    };
    auto parse_bool_value = [&](const YAML::Node& v, const std::string& p) -> char {
      std::string s = scalar(v, p);
      if (s == "true") return 1;
      if (s == "false") return 0;
      fail(p, "expected true or false");
    };

    if (def.type == "numeric") {
      NumericTable table;
      table.name = def.name;
      table.dims = dims;
      fill_table(table, node, dims, total, path,
                 [&](const YAML::Node& v, const std::string& p) {
                   return as_number(v, model.cost_type, p);
                 },
                 Number(0));
      model.tables.add_numeric(std::move(table));
    } else if (def.type == "element") {
      ElementTable table;
      table.name = def.name;
      table.dims = dims;
      table.object_type = value_type;
      fill_table(table, node, dims, total, path, parse_element_value, std::int64_t{0});
      model.tables.add_element(std::move(table));
    } else if (def.type == "set") {
      SetTable table;
      table.name = def.name;
      table.dims = dims;
      table.object_type = value_type;
      fill_table(table, node, dims, total, path, parse_set_value, IndexSet(universe));
      model.tables.add_set(std::move(table));
    } else {
      BoolTable table;
      table.name = def.name;
      table.dims = dims;
      fill_table(table, node, dims, total, path, parse_bool_value, char{0});
      model.tables.add_boolean(std::move(table));
    }
  }

  // Target state.
  if (!root["target"] && !domain.state_variables.empty()) fail("problem", "missing target");
  model.target = model.blank_state();
  if (root["target"]) {
    std::set<std::string> names;
    for (const auto& v : domain.state_variables) names.insert(v.name);
    check_keys(root["target"], names, "problem.target");
  }
  for (const auto& decl : model.variables) {
    std::string path = "problem.target." + decl.name;
    const YAML::Node node = root["target"][decl.name];
    if (!node) fail(path, "target must assign every state variable");
    switch (decl.kind) {
      case VarKind::set: {
        if (!node.IsSequence()) fail(path, "set values are lists of indices");
        int universe = model.object_types[decl.object_type].count;
        IndexSet s(universe);
        for (std::size_t k = 0; k < node.size(); ++k) {
          std::int64_t member = as_int(node[k], path);
          if (member < 0 || member >= universe) fail(path, "set member out of range");
          s.insert(member);
        }
        model.target.sets[decl.index] = std::move(s);
        break;
      }
      case VarKind::element: {
        std::int64_t value = as_int(node, path);
        int universe = model.object_types[decl.object_type].count;
        if (value < 0 || value >= universe) fail(path, "element value out of range");
        model.target.elements[decl.index] = value;
        break;
      }
      case VarKind::numeric:
        model.target.numerics[decl.index] = as_number(node, model.cost_type, path);
        break;
    }
  }

  // Conditions, transitions, and bounds: domain sections first, then the
  // problem's additions.
  Grounder grounder{model, {}};
  auto ground_conditions = [&](const std::vector<YamlConditionEntry>& entries,
                               std::vector<ConditionPtr>& out, const std::string& path) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      for (auto& c : grounder.expand_condition(entries[k], path + "[" + std::to_string(k) + "]")) {
        out.push_back(std::move(c));
      }
    }
  };

  ground_conditions(domain.constraints, model.state_constraints, "domain.constraints");
  for (std::size_t k = 0; k < domain.base_cases.size(); ++k) {
    std::vector<ConditionPtr> base;
    ground_conditions(domain.base_cases[k], base, "domain.base_cases[" + std::to_string(k) + "]");
    model.base_cases.push_back(std::move(base));
  }
  for (std::size_t k = 0; k < domain.transitions.size(); ++k) {
    grounder.expand_transition(domain.transitions[k],
                               "domain.transitions[" + std::to_string(k) + "]");
  }
  ParseContext ctx = grounder.context();
  for (std::size_t k = 0; k < domain.dual_bounds.size(); ++k) {
    try {
      model.dual_bounds.push_back(parse_numeric(domain.dual_bounds[k], ctx));
    } catch (const ParseError& e) {
      throw ParseError("domain.dual_bounds[" + std::to_string(k) + "]: " + e.reason);
    }
  }

  // Optional additive sections in the problem file.
  ground_conditions(parse_condition_list(root["constraints"], "problem.constraints"),
                    model.state_constraints, "problem.constraints");
  if (root["base_cases"]) {
    if (!root["base_cases"].IsSequence()) fail("problem.base_cases", "expected a sequence");
    for (std::size_t k = 0; k < root["base_cases"].size(); ++k) {
      std::vector<ConditionPtr> base;
      ground_conditions(parse_condition_list(root["base_cases"][k],
                                             "problem.base_cases[" + std::to_string(k) + "]"),
                        base, "problem.base_cases[" + std::to_string(k) + "]");
      model.base_cases.push_back(std::move(base));
    }
  }
  for (const auto& def : parse_transitions(root["transitions"], "problem.transitions")) {
    grounder.expand_transition(def, "problem.transitions");
  }
  for (const auto& text : parse_string_list(root["dual_bounds"], "problem.dual_bounds")) {
    try {
      model.dual_bounds.push_back(parse_numeric(text, ctx));
    } catch (const ParseError& e) {
      throw ParseError("problem.dual_bounds: " + e.reason);
    }
  }

  // The grounded model must validate.
  std::vector<Diagnostic> diags = validate_model(model);
  for (const auto& d : diags) {
    if (d.severity == Diagnostic::Severity::error) {
      throw ParseError("grounded model is invalid: " + d.message);
    }
  }
  return model;
}

Model load_files(const std::string& domain_path, const std::string& problem_path) {
  auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  DomainDef domain = load_domain(slurp(domain_path));
  return load_problem(domain, slurp(problem_path));
}

// --- emission -------------------------------------------------------------

namespace {

std::string quote(const std::string& text) {
  return "\"" + text + "\"";
}

void emit_condition_entry(std::ostringstream& out, const YamlConditionEntry& entry,
                          const std::string& indent) {
  if (entry.forall.empty()) {
    out << indent << "- " << quote(entry.condition) << "\n";
    return;
  }
  out << indent << "- forall: [";
  for (std::size_t k = 0; k < entry.forall.size(); ++k) {
    out << (k ? ", " : "") << "{name: " << entry.forall[k].first
        << ", object: " << entry.forall[k].second << "}";
  }
  out << "]\n" << indent << "  condition: " << quote(entry.condition) << "\n";
}

}  // namespace

std::string emit_domain(const DomainDef& domain) {
  std::ostringstream out;
  out << "objects: [";
  for (std::size_t k = 0; k < domain.objects.size(); ++k) {
    out << (k ? ", " : "") << domain.objects[k];
  }
  out << "]\n";
  out << "state_variables:\n";
  for (const auto& v : domain.state_variables) {
    out << "  - {name: " << v.name << ", type: " << v.type;
    if (!v.object.empty()) out << ", object: " << v.object;
    if (!v.preference.empty()) out << ", preference: " << v.preference;
    out << "}\n";
  }
  if (!domain.tables.empty()) {
    out << "tables:\n";
    for (const auto& t : domain.tables) {
      out << "  - {name: " << t.name << ", type: " << t.type << ", args: [";
      for (std::size_t k = 0; k < t.args.size(); ++k) out << (k ? ", " : "") << t.args[k];
      out << "]";
      if (!t.object.empty()) out << ", object: " << t.object;
      out << "}\n";
    }
  }
  out << "reduce: " << domain.reduce << "\n";
  out << "cost_type: " << domain.cost_type << "\n";
  if (!domain.constraints.empty()) {
    out << "constraints:\n";
    for (const auto& entry : domain.constraints) emit_condition_entry(out, entry, "  ");
  }
  if (!domain.base_cases.empty()) {
    out << "base_cases:\n";
    for (const auto& base : domain.base_cases) {
      out << "  - [";
      // Base cases with forall entries need the block form.
      bool simple = true;
      for (const auto& entry : base) {
        if (!entry.forall.empty()) simple = false;
      }
      if (simple) {
        for (std::size_t k = 0; k < base.size(); ++k) {
          out << (k ? ", " : "") << quote(base[k].condition);
        }
        out << "]\n";
      } else {
        out << "]\n";
        throw DidpError("emit_domain: base cases with forall entries are not supported");
      }
    }
  }
  if (!domain.transitions.empty()) {
    out << "transitions:\n";
    for (const auto& t : domain.transitions) {
      out << "  - name: " << t.name << "\n";
      if (t.forced) out << "    forced: true\n";
      if (!t.parameters.empty()) {
        out << "    parameters: [";
        for (std::size_t k = 0; k < t.parameters.size(); ++k) {
          out << (k ? ", " : "") << "{name: " << t.parameters[k].first
              << ", object: " << t.parameters[k].second << "}";
        }
        out << "]\n";
      }
      if (!t.preconditions.empty()) {
        out << "    preconditions:\n";
        for (const auto& entry : t.preconditions) emit_condition_entry(out, entry, "      ");
      }
      if (!t.effects.empty()) {
        out << "    effects:\n";
        for (const auto& [name, text] : t.effects) {
          out << "      " << name << ": " << quote(text) << "\n";
        }
      }
      out << "    cost: " << quote(t.cost) << "\n";
    }
  }
  if (!domain.dual_bounds.empty()) {
    out << "dual_bounds:\n";
    for (const auto& b : domain.dual_bounds) out << "  - " << quote(b) << "\n";
  }
  return out.str();
}

}  // namespace didp
