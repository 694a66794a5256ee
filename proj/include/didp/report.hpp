#pragma once

#include <string>

#include "didp/oracle.hpp"
#include "didp/solver.hpp"

namespace didp {

// Human-readable block: status, cost, transitions, best bound, statistics.
std::string format_human(const Model& model, const Solution& solution);

// One machine-readable JSON record per event; the schema is pinned by a
// golden test. `elapsed` overrides the wall time when nonnegative so tests
// stay deterministic.
std::string format_jsonl(const Model& model, const Solution& solution, double elapsed = -1.0);

std::string format_human(const OracleResult& result);
std::string format_jsonl(const Model& model, const OracleResult& result);

}  // namespace didp
