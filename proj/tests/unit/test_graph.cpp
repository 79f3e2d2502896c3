#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "builders.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "stcvrp/error.hpp"
#include "stcvrp/route.hpp"

using namespace stcvrp;
using stcvrp::support::depot;
using stcvrp::support::graph_of;
using stcvrp::support::ids;
using stcvrp::support::node;

TEST(TravelTime, Examples) {
  EXPECT_NEAR(travel_time(node(1, 0, 0, 0, 1), node(2, 3, 4, 0, 1)), 5.0, 1e-12);
  EXPECT_EQ(travel_time(node(1, 7, 2, 0, 1), node(1, 7, 2, 0, 1)), 0.0);
  EXPECT_NEAR(travel_time(node(1, 0, 0, 0, 1), node(2, 1, 1, 0, 1)), 1.41421356, 1e-8);
}

TEST(NominalTime, Examples) {
  EXPECT_DOUBLE_EQ(nominal_visit_time(node(1, 0, 0, 0, 100, 0)), 50.0);
  EXPECT_DOUBLE_EQ(nominal_visit_time(node(1, 0, 0, 912, 967, 90)), 894.5);
  EXPECT_DOUBLE_EQ(nominal_visit_time(node(1, 0, 0, 30, 80, 5), NominalTimePolicy::earliest),
                   30.0);
}

TEST(Graph, TravelMatrixIsSymmetricWithZeroDiagonal) {
  const Instance inst = support::random_instance(5, {});
  const Graph g = Graph::from_instance(inst);
  for (std::size_t a = 0; a < g.size(); ++a) {
    EXPECT_EQ(g.tau_at(a, a), 0.0);
    for (std::size_t b = 0; b < g.size(); ++b) {
      EXPECT_EQ(g.tau_at(a, b), g.tau_at(b, a));
      EXPECT_GE(g.tau_at(a, b), 0.0);
    }
  }
}

TEST(Graph, RejectsBadMatricesAndIds) {
  std::vector<CoarseNode> nodes{depot(), node(1, 1, 0, 0, 10)};
  EXPECT_THROW(Graph(nodes, {0, 1, 2, 0}, 10), std::invalid_argument);
  EXPECT_THROW(Graph(nodes, {0, -1, -1, 0}, 10), std::invalid_argument);
  EXPECT_THROW(Graph(nodes, {1, 1, 1, 0}, 10), std::invalid_argument);
  EXPECT_THROW(Graph({depot(), node(1, 0, 0, 0, 1), node(1, 1, 1, 0, 1)}, 10),
               std::invalid_argument);
  const Graph g(nodes, 10);
  EXPECT_THROW((void)g.index_of(NodeId{9}), StructuralError);
}

TEST(Schedule, WaitThenServe) {
  const Graph g = graph_of(depot(), {node(1, 10, 0, 20, 30, 5)});
  const Route r = recompute_schedule(make_route(ids({1})), g);
  const StopTiming& c = r.schedule[1];
  EXPECT_DOUBLE_EQ(c.arrival, 10.0);
  EXPECT_DOUBLE_EQ(c.wait, 10.0);
  EXPECT_DOUBLE_EQ(c.service_start, 20.0);
  EXPECT_DOUBLE_EQ(c.departure, 25.0);
  EXPECT_EQ(r.tw_violations, 0);
}

TEST(Schedule, LateServiceIsFlaggedButScheduled) {
  const Graph g = graph_of(depot(), {node(1, 10, 0, 0, 8, 5)});
  const Route r = recompute_schedule(make_route(ids({1})), g);
  EXPECT_TRUE(r.schedule[1].late);
  EXPECT_DOUBLE_EQ(r.schedule[1].service_start, 10.0);
  EXPECT_EQ(r.tw_violations, 1);
}

TEST(Schedule, EmptyRoute) {
  const Graph g = graph_of(depot(), {node(1, 10, 0, 0, 8, 5)});
  const Route r = recompute_schedule(make_route({}), g);
  ASSERT_EQ(r.stops.size(), 2u);
  EXPECT_EQ(r.schedule.back().arrival, 0.0);
  EXPECT_EQ(r.tw_violations, 0);
  EXPECT_FALSE(r.over_capacity);
}

TEST(Schedule, CapacityAndStructure) {
  const Graph g = graph_of(depot(), {node(1, 1, 0, 0, 100, 0, 6), node(2, 2, 0, 0, 100, 0, 6)}, 10);
  const Route r = recompute_schedule(make_route(ids({1, 2})), g);
  EXPECT_TRUE(r.over_capacity);
  EXPECT_DOUBLE_EQ(r.load, 12.0);
  Route bad;
  bad.stops = ids({1, 2});
  EXPECT_THROW(recompute_schedule(bad, g), StructuralError);
  EXPECT_THROW(recompute_schedule(make_route(ids({1, 7})), g), StructuralError);
  EXPECT_THROW(recompute_schedule(make_route(ids({1, 0, 2})), g), StructuralError);
}

TEST(Schedule, MatchesIndependentSimulation) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    support::RandomInstanceOptions options;
    options.customers = 12;
    options.min_width = 5;
    options.max_width = 60;
    const Instance inst = support::random_instance(seed, options);
    const Graph g = Graph::from_instance(inst);
    std::vector<int> order(inst.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k + 1);
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(1 + seed % order.size());

    std::vector<NodeId> stops;
    for (int id : order) stops.push_back(NodeId{id});
    const Route r = recompute_schedule(make_route(stops), g);
    const auto expected = support::simulate(inst, order);
    ASSERT_EQ(expected.size() + 1, r.schedule.size());
    int late = 0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const StopTiming& got = r.schedule[k + 1];
      EXPECT_NEAR(got.arrival, expected[k].arrival, 1e-9);
      EXPECT_NEAR(got.service_start, expected[k].service_start, 1e-9);
      EXPECT_NEAR(got.departure, expected[k].departure, 1e-9);
      EXPECT_EQ(got.late, expected[k].late);
      // Waiting happens exactly when the vehicle is early.
      EXPECT_EQ(got.wait > 0.0, got.arrival < g.node(r.stops[k + 1]).window.earliest);
      if (got.late) ++late;
    }
    EXPECT_EQ(r.tw_violations, late);
    EXPECT_NEAR(route_distance(r, g), support::route_length(inst, order), 1e-9);
    for (std::size_t k = 1; k + 1 < r.schedule.size(); ++k) {
      EXPECT_LE(r.schedule[k - 1].departure, r.schedule[k].departure);
    }
  }
}

TEST(Schedule, RemovingAStopNeverLengthensARoute) {
  const Instance inst = support::random_instance(3, {});
  const Graph g = Graph::from_instance(inst);
  const auto full = ids({1, 2, 3, 4, 5, 6});
  const double base = route_distance(make_route(full), g);
  for (std::size_t drop = 0; drop < full.size(); ++drop) {
    auto shorter = full;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(drop));
    EXPECT_LE(route_distance(make_route(shorter), g), base + 1e-9);
  }
}
