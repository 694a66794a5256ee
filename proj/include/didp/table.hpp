#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "didp/errors.hpp"
#include "didp/index_set.hpp"
#include "didp/number.hpp"

namespace didp {

enum class TableKind { element, set, numeric, boolean };

inline const char* table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::element: return "element";
    case TableKind::set: return "set";
    case TableKind::numeric: return "numeric";
    case TableKind::boolean: return "boolean";
  }
  return "?";
}

// Dense row-major storage shared by all table kinds. Arity 0 is a scalar
// constant (dims empty, exactly one value).
template <class V>
struct TableData {
  std::string name;
  std::vector<int> dims;
  std::vector<V> values;
  int object_type = -1;  // value universe for element/set tables

  int arity() const { return static_cast<int>(dims.size()); }

  std::size_t size() const {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
  }

  std::size_t flat_index(const std::vector<std::int64_t>& idx) const {
    if (static_cast<int>(idx.size()) != arity()) {
      throw EvalError("table '" + name + "' expects " + std::to_string(arity()) +
                      " indices, got " + std::to_string(idx.size()));
    }
    std::size_t flat = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= dims[k]) {
        throw EvalError("index " + std::to_string(idx[k]) + " out of range for dimension " +
                        std::to_string(k) + " of table '" + name + "'");
      }
      flat = flat * static_cast<std::size_t>(dims[k]) + static_cast<std::size_t>(idx[k]);
    }
    return flat;
  }

  const V& at(const std::vector<std::int64_t>& idx) const { return values[flat_index(idx)]; }
};

using NumericTable = TableData<Number>;
using ElementTable = TableData<std::int64_t>;
using SetTable = TableData<IndexSet>;
using BoolTable = TableData<char>;

// Holds every constant table of a model, looked up by (kind, index).
struct TableRegistry {
  std::vector<NumericTable> numeric;
  std::vector<ElementTable> element;
  std::vector<SetTable> set;
  std::vector<BoolTable> boolean;

  std::optional<std::pair<TableKind, int>> find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  int add_numeric(NumericTable t) {
    register_name(t.name, TableKind::numeric, static_cast<int>(numeric.size()));
    numeric.push_back(std::move(t));
    return static_cast<int>(numeric.size()) - 1;
  }

  int add_element(ElementTable t) {
    register_name(t.name, TableKind::element, static_cast<int>(element.size()));
    element.push_back(std::move(t));
    return static_cast<int>(element.size()) - 1;
  }

  int add_set(SetTable t) {
    register_name(t.name, TableKind::set, static_cast<int>(set.size()));
    set.push_back(std::move(t));
    return static_cast<int>(set.size()) - 1;
  }

  int add_boolean(BoolTable t) {
    register_name(t.name, TableKind::boolean, static_cast<int>(boolean.size()));
    boolean.push_back(std::move(t));
    return static_cast<int>(boolean.size()) - 1;
  }

 private:
  void register_name(const std::string& name, TableKind kind, int index) {
    if (by_name_.count(name)) {
      throw DidpError("duplicate table name '" + name + "'");
    }
    by_name_.emplace(name, std::make_pair(kind, index));
  }

  std::unordered_map<std::string, std::pair<TableKind, int>> by_name_;
};

}  // namespace didp
