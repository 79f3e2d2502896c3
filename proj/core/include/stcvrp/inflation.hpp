#pragma once

#include "stcvrp/coarsening.hpp"
#include "stcvrp/heuristics.hpp"

namespace stcvrp {

/// Expands every super-node of `coarse` into its children, in merge order,
/// and recomputes the schedules on `original`. Throws StructuralError when a
/// stop is neither an original node nor produced by `history`.
Solution inflate(const Solution& coarse, const MergeHistory& history, const Graph& original);

struct RepairStats {
  int swaps = 0;
  int capacity_splits = 0;
};

struct RepairResult {
  Solution solution;
  RepairStats stats;
};

/// Adjacent swaps that clear a late stop without adding violations
/// elsewhere, then splits trailing customers off overloaded routes into
/// singleton routes. Applying it twice changes nothing.
RepairResult light_postprocess(Solution solution, const Graph& graph);

}  // namespace stcvrp
