#include <gtest/gtest.h>

#include <algorithm>

#include "builders.hpp"
#include "checks.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "stcvrp/error.hpp"
#include "stcvrp/evaluation.hpp"
#include "stcvrp/inflation.hpp"

using namespace stcvrp;
using stcvrp::support::depot;
using stcvrp::support::graph_of;
using stcvrp::support::ids;
using stcvrp::support::node;

namespace {

MergeRecord record(int super, int left, int right, MergeOrder order = MergeOrder::i_then_j) {
  MergeRecord r;
  r.super_id = NodeId{super};
  r.left = NodeId{left};
  r.right = NodeId{right};
  r.order = order;
  return r;
}

Solution one_route(std::initializer_list<int> customers) {
  Solution s;
  s.routes.push_back(make_route(ids(customers)));
  return s;
}

const Graph& line_graph() {
  static const Graph g = graph_of(depot(), {node(1, 1, 0, 0, 1000), node(2, 2, 0, 0, 1000),
                                            node(3, 3, 0, 0, 1000), node(4, 4, 0, 0, 1000)});
  return g;
}

}  // namespace

TEST(Inflate, SingleSubstitution) {
  MergeHistory h{{record(5, 1, 2)}};
  EXPECT_EQ(inflate(one_route({5}), h, line_graph()).routes.front().stops, ids({0, 1, 2, 0}));
  MergeHistory reversed{{record(5, 1, 2, MergeOrder::j_then_i)}};
  EXPECT_EQ(inflate(one_route({5}), reversed, line_graph()).routes.front().stops,
            ids({0, 2, 1, 0}));
}

TEST(Inflate, NestedExpansion) {
  MergeHistory h{{record(5, 1, 2), record(6, 5, 3)}};
  EXPECT_EQ(inflate(one_route({6, 4}), h, line_graph()).routes.front().stops,
            ids({0, 1, 2, 3, 4, 0}));
  MergeHistory flipped{{record(5, 1, 2), record(6, 5, 3, MergeOrder::j_then_i)}};
  EXPECT_EQ(inflate(one_route({6}), flipped, line_graph()).routes.front().stops,
            ids({0, 3, 1, 2, 0}));
}

TEST(Inflate, EmptyHistoryIsIdentity) {
  const Solution s = inflate(one_route({2, 1, 4, 3}), {}, line_graph());
  EXPECT_EQ(s.routes.front().stops, ids({0, 2, 1, 4, 3, 0}));
}

TEST(Inflate, UnknownSuperNodeIsStructural) {
  EXPECT_THROW(inflate(one_route({9}), {}, line_graph()), StructuralError);
}

TEST(Inflate, UnusedRecordsAreIgnored) {
  MergeHistory h{{record(5, 1, 2), record(7, 3, 4)}};
  EXPECT_EQ(inflate(one_route({5}), h, line_graph()).routes.front().stops, ids({0, 1, 2, 0}));
}

TEST(Postprocess, SwapFixesAWrongOrder) {
  // Route 3, 2, 1 reaches customer 2 at time 13 but it closes at 12.
  // Swapping 2 with its predecessor serves everyone on time.
  Instance inst;
  inst.name = "swap";
  inst.vehicle_count = 1;
  inst.capacity = 100;
  inst.depot = {kDepotId, 0, 0, 0, 0, 1000, 0};
  inst.customers = {{NodeId{1}, 10, 0, 1, 0, 100, 0},
                    {NodeId{2}, 11, 0, 1, 0, 12, 0},
                    {NodeId{3}, 12, 0, 1, 0, 100, 0}};
  const Graph g = Graph::from_instance(inst);
  const Solution before = inflate(one_route({3, 2, 1}), {}, g);
  EXPECT_EQ(evaluate(before, g).tw_violations, 1);

  const RepairResult repaired = light_postprocess(before, g);
  EXPECT_EQ(repaired.stats.swaps, 1);
  EXPECT_EQ(repaired.solution.routes.front().stops, ids({0, 2, 3, 1, 0}));
  EXPECT_EQ(evaluate(repaired.solution, g).tw_violations, 0);
  for (const auto& stop : support::simulate(inst, {2, 3, 1})) EXPECT_FALSE(stop.late);
}

TEST(Postprocess, FeasibleSolutionIsUnchanged) {
  const Solution s = inflate(one_route({1, 2, 3, 4}), {}, line_graph());
  const RepairResult r = light_postprocess(s, line_graph());
  EXPECT_EQ(r.stats.swaps, 0);
  EXPECT_EQ(r.stats.capacity_splits, 0);
  EXPECT_EQ(r.solution.routes.front().stops, s.routes.front().stops);
}

TEST(Postprocess, CapacityExcessOfOneCustomerIsSplit) {
  const Graph g = graph_of(depot(), {node(1, 1, 0, 0, 1000, 0, 5), node(2, 2, 0, 0, 1000, 0, 5),
                                     node(3, 3, 0, 0, 1000, 0, 4)},
                           10);
  const RepairResult r = light_postprocess(inflate(one_route({1, 2, 3}), {}, g), g);
  EXPECT_EQ(r.stats.capacity_splits, 1);
  ASSERT_EQ(r.solution.routes.size(), 2u);
  EXPECT_EQ(r.solution.routes[0].stops, ids({0, 1, 2, 0}));
  EXPECT_EQ(r.solution.routes[1].stops, ids({0, 3, 0}));
  EXPECT_EQ(evaluate(r.solution, g).capacity_violations, 0);
}

TEST(Pipeline, InflationProperties) {
  int expanded = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    support::RandomInstanceOptions o;
    o.customers = 15 + static_cast<int>(seed % 25);
    o.min_width = 20;
    o.max_width = 400;
    const Graph g = Graph::from_instance(support::random_instance(seed, o));
    CoarseningParams p;
    p.alpha = 0.5;
    p.beta = 0.1;
    p.p_target = 0.3;
    p.radius_coeff = 2.0;
    p.separation = seed % 2 ? SeparationMode::strict : SeparationMode::nominal;
    const CoarseningResult coarse = coarsen(g, p);
    if (coarse.history.empty()) continue;
    ++expanded;
    for (SolverKind kind : {SolverKind::greedy, SolverKind::savings}) {
      const Solution reduced = solve(coarse.graph, kind);
      const Solution full = inflate(reduced, coarse.history, g);
      ASSERT_EQ(full.routes.size(), reduced.routes.size());
      EXPECT_EQ(support::coverage_problem(full, g), "");

      // Each coarse stop becomes its members, consecutively and in order.
      for (std::size_t r = 0; r < reduced.routes.size(); ++r) {
        std::vector<NodeId> expected{kDepotId};
        for (NodeId id : reduced.routes[r].customers()) {
          const auto& members = coarse.graph.node(id).members;
          expected.insert(expected.end(), members.begin(), members.end());
        }
        expected.push_back(kDepotId);
        EXPECT_EQ(full.routes[r].stops, expected);
      }

      const RepairResult once = light_postprocess(full, g);
      const RepairResult twice = light_postprocess(once.solution, g);
      EXPECT_EQ(twice.stats.swaps, 0);
      EXPECT_EQ(twice.stats.capacity_splits, 0);
      ASSERT_EQ(twice.solution.routes.size(), once.solution.routes.size());
      for (std::size_t r = 0; r < once.solution.routes.size(); ++r) {
        EXPECT_EQ(twice.solution.routes[r].stops, once.solution.routes[r].stops);
      }
      EXPECT_LE(evaluate(once.solution, g).tw_violations, evaluate(full, g).tw_violations);
    }
  }
  EXPECT_GT(expanded, 30);
}

TEST(Pipeline, ConservativeModesPreserveFeasibility) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    support::RandomInstanceOptions o;
    o.customers = 20 + static_cast<int>(seed % 20);
    o.min_width = 50;
    o.max_width = 400;
    const Graph g = Graph::from_instance(support::random_instance(seed, o));
    CoarseningParams p;
    p.alpha = 0.5;
    p.beta = 0.1;
    p.p_target = 0.3;
    p.radius_coeff = 2.0;
    p.separation = SeparationMode::strict;
    p.propagation = Propagation::conservative;
    p.tau_mode = TauMode::conservative;
    const CoarseningResult coarse = coarsen(g, p);
    for (SolverKind kind : {SolverKind::greedy, SolverKind::savings}) {
      const Solution reduced = solve(coarse.graph, kind);
      const Solution full = inflate(reduced, coarse.history, g);
      for (std::size_t r = 0; r < reduced.routes.size(); ++r) {
        const Route coarse_route = recompute_schedule(reduced.routes[r], coarse.graph);
        if (coarse_route.tw_violations != 0) continue;
        ++checked;
        EXPECT_EQ(full.routes[r].tw_violations, 0) << "seed " << seed << " route " << r;
      }
    }
  }
  EXPECT_GT(checked, 100);
}
