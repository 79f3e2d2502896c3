#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stcvrp/coarsening.hpp"
#include "stcvrp/evaluation.hpp"
#include "stcvrp/heuristics.hpp"
#include "stcvrp/tuning.hpp"

namespace stcvrp {

struct StopRecord {
  NodeId node_id{};
  double arrival = 0.0;
  double wait = 0.0;
  double service_start = 0.0;
  double departure = 0.0;

  friend bool operator==(const StopRecord&, const StopRecord&) = default;
};

struct RouteRecord {
  int vehicle = 0;
  std::vector<StopRecord> stops;

  friend bool operator==(const RouteRecord&, const RouteRecord&) = default;
};

struct NodeRecord {
  NodeId id{};
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

/// Serialized result of one pipeline run. `nodes` carries the coordinates
/// of the depot and every customer so a document can be plotted on its own.
struct SolutionDocument {
  std::string instance;
  std::uint64_t seed = 0;
  CoarseningParams params;
  SolverKind solver = SolverKind::greedy;
  std::vector<RouteRecord> routes;
  Metrics metrics;
  StageTimings timings;
  std::vector<NodeRecord> nodes;
};

/// Routes without customers are dropped; vehicles are numbered from 1.
SolutionDocument make_document(std::string instance, std::uint64_t seed,
                               const CoarseningParams& params, SolverKind solver,
                               const Solution& solution, const Metrics& metrics,
                               const StageTimings& timings, const Graph& graph);

Solution to_solution(const SolutionDocument& document);

void write_solution(std::ostream& out, const SolutionDocument& document);
std::string write_solution(const SolutionDocument& document);

/// Throws SchemaError when the input is not a valid solution document.
SolutionDocument read_solution(std::istream& in);
SolutionDocument read_solution(const std::string& text);

bool same_structure(const SolutionDocument& a, const SolutionDocument& b);

}  // namespace stcvrp
