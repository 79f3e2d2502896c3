#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "stcvrp/ids.hpp"
#include "stcvrp/instance.hpp"

namespace stcvrp {

enum class NodeKind { depot, customer, supernode };

/// How the nominal visit time of an original customer is chosen.
enum class NominalTimePolicy { midpoint, earliest };

struct TimeWindow {
  double earliest = 0.0;
  double latest = 0.0;

  [[nodiscard]] bool empty() const { return earliest > latest; }
  [[nodiscard]] double midpoint() const { return 0.5 * (earliest + latest); }

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// A node of the working graph: the depot, an original customer, or a
/// super-node standing for an ordered group of customers.
struct CoarseNode {
  NodeId id{};
  NodeKind kind = NodeKind::customer;
  double x = 0.0;
  double y = 0.0;
  double demand = 0.0;
  double service = 0.0;
  TimeWindow window;
  double nominal_time = 0.0;
  std::vector<NodeId> members;  // original customers in service order

  friend bool operator==(const CoarseNode&, const CoarseNode&) = default;
};

double euclidean(double ax, double ay, double bx, double by);

/// Unit speed: travel time equals Euclidean distance.
double travel_time(const CoarseNode& a, const CoarseNode& b);

/// midpoint: (e + (l - s)) / 2, earliest: e.
double nominal_visit_time(const CoarseNode& node,
                          NominalTimePolicy policy = NominalTimePolicy::midpoint);

CoarseNode make_depot_node(const Customer& depot);
CoarseNode make_customer_node(const Customer& customer,
                              NominalTimePolicy policy = NominalTimePolicy::midpoint);

/// Complete graph over a depot and customer/super nodes with a symmetric
/// travel-time matrix. Immutable after construction.
class Graph {
 public:
  /// Euclidean metric. `nodes.front()` must be the depot.
  Graph(std::vector<CoarseNode> nodes, double capacity);

  /// Explicit metric: `travel` is row-major, size nodes.size()^2, symmetric,
  /// nonnegative with a zero diagonal.
  Graph(std::vector<CoarseNode> nodes, std::vector<double> travel, double capacity);

  static Graph from_instance(const Instance& instance,
                             NominalTimePolicy policy = NominalTimePolicy::midpoint);

  [[nodiscard]] const CoarseNode& depot() const { return nodes_.front(); }
  [[nodiscard]] std::span<const CoarseNode> nodes() const { return nodes_; }
  [[nodiscard]] std::span<const CoarseNode> customers() const {
    return std::span<const CoarseNode>(nodes_).subspan(1);
  }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] std::size_t customer_count() const { return nodes_.size() - 1; }
  [[nodiscard]] double capacity() const { return capacity_; }

  [[nodiscard]] bool contains(NodeId id) const { return index_.contains(id); }
  /// Throws StructuralError for unknown ids.
  [[nodiscard]] std::size_t index_of(NodeId id) const;
  [[nodiscard]] const CoarseNode& node(NodeId id) const { return nodes_[index_of(id)]; }

  [[nodiscard]] double tau(NodeId a, NodeId b) const { return tau_at(index_of(a), index_of(b)); }
  [[nodiscard]] double tau_at(std::size_t a, std::size_t b) const {
    return travel_[a * nodes_.size() + b];
  }
  [[nodiscard]] const std::vector<double>& travel_matrix() const { return travel_; }

  [[nodiscard]] NodeId max_id() const;

 private:
  void build_index();

  std::vector<CoarseNode> nodes_;
  std::vector<double> travel_;
  std::unordered_map<NodeId, std::size_t> index_;
  double capacity_ = 0.0;
};

}  // namespace stcvrp
