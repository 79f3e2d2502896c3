#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stcvrp/graph.hpp"

namespace stcvrp {

/// Rule for the time window of a merged node.
enum class Propagation {
  relaxed,       // union-like, may admit violations after inflation
  conservative,  // intersection, may veto a merge
};

/// Temporal separation between two nodes.
enum class SeparationMode {
  nominal,  // |t_i - t_j|
  strict,   // max(0, e_j - (t_i + s_i + tau_ij))
};

/// Travel time from a new super-node to the rest of the graph.
enum class TauMode {
  midpoint,      // Euclidean from the merged position
  conservative,  // upper bound keeping coarse-feasible routes feasible
};

enum class MergeOrder { i_then_j, j_then_i };

struct CoarseningParams {
  double alpha = 0.5;
  double beta = 0.5;
  double p_target = 0.5;     // fraction of customer nodes to keep, in (0, 1]
  double radius_coeff = 1.0;
  Propagation propagation = Propagation::relaxed;
  SeparationMode separation = SeparationMode::nominal;
  TauMode tau_mode = TauMode::midpoint;
  // Radius = radius_coeff * max extent * radius_base_scale / sqrt(n).
  double radius_base_scale = 1.0;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

double temporal_separation(const CoarseNode& i, const CoarseNode& j, SeparationMode mode,
                           double tau_ij);

/// alpha * tau_ij + beta * temporal_separation(i, j).
double st_distance(const CoarseNode& i, const CoarseNode& j, const CoarseningParams& params,
                   double tau_ij);

/// Undirected variant used to rank candidate pairs. The strict separation is
/// asymmetric, so the smaller of the two directions is used.
double pair_distance(const CoarseNode& i, const CoarseNode& j, const CoarseningParams& params,
                     double tau_ij);

struct MergeDirections {
  bool forward = false;   // i then j
  bool backward = false;  // j then i

  [[nodiscard]] bool any() const { return forward || backward; }
};

MergeDirections merge_feasibility(const CoarseNode& i, const CoarseNode& j, double tau_ij,
                                  double tau_ji);

/// Scheduling room of a feasible service order.
double merge_slack(const CoarseNode& i, const CoarseNode& j, MergeOrder order, double tau);

/// Feasible order with the larger slack; ties go to the lower id first.
std::optional<MergeOrder> choose_order(const CoarseNode& i, const CoarseNode& j, double tau_ij,
                                       double tau_ji);

/// Window of the merged node. An empty result vetoes the merge.
TimeWindow aggregate_window(const CoarseNode& i, const CoarseNode& j, MergeOrder order,
                            double tau, Propagation mode);

/// Caps the latest start so that the second node, reached after serving the
/// first and travelling between them, still starts within its own window.
TimeWindow bound_by_internal_route(TimeWindow window, const CoarseNode& first,
                                   const CoarseNode& second, double tau);

/// Candidate threshold: coeff * max(x extent, y extent) * base_scale / sqrt(n).
double radius_threshold(const Graph& graph, double radius_coeff, double base_scale = 1.0);

struct MergeRecord {
  NodeId super_id{};
  NodeId left{};
  NodeId right{};
  MergeOrder order = MergeOrder::i_then_j;
  TimeWindow window;
  // Operands as they were just before the merge.
  CoarseNode left_node;
  CoarseNode right_node;
  double tau_left_right = 0.0;

  [[nodiscard]] NodeId first() const { return order == MergeOrder::i_then_j ? left : right; }
  [[nodiscard]] NodeId second() const { return order == MergeOrder::i_then_j ? right : left; }
};

struct MergeHistory {
  std::vector<MergeRecord> records;  // chronological

  [[nodiscard]] bool empty() const { return records.empty(); }
  [[nodiscard]] std::size_t size() const { return records.size(); }
};

struct MergeOutcome {
  Graph graph;
  CoarseNode super_node;
};

/// Replaces i and j by a super-node with id `super_id`. Throws
/// std::invalid_argument if either operand is the depot.
MergeOutcome merge_pair(const Graph& graph, NodeId i, NodeId j, MergeOrder order,
                        TimeWindow window, TauMode tau_mode, NodeId super_id);

struct RoundStats {
  int round = 0;
  std::size_t nodes_before = 0;  // customer nodes
  std::size_t candidates = 0;
  std::size_t merges_applied = 0;
  double rho = 0.0;
};

std::string to_string(const RoundStats& stats);

enum class HaltReason { target_reached, empty_matching };

struct CoarseningResult {
  Graph graph;
  MergeHistory history;
  std::vector<RoundStats> rounds;
  HaltReason halt = HaltReason::target_reached;
};

/// Called after every applied round with the graph at the new level.
using RoundObserver = std::function<void(const RoundStats&, const Graph&)>;

CoarseningResult coarsen(const Graph& graph, const CoarseningParams& params,
                         const RoundObserver& observer = {});

const char* to_string(Propagation mode);
const char* to_string(SeparationMode mode);
const char* to_string(TauMode mode);
const char* to_string(HaltReason reason);
const char* to_string(MergeOrder order);

/// Throw std::invalid_argument on unknown names.
Propagation parse_propagation(std::string_view name);
SeparationMode parse_separation(std::string_view name);
TauMode parse_tau_mode(std::string_view name);

}  // namespace stcvrp
