#include "stcvrp/solution_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "stcvrp/error.hpp"

namespace stcvrp {
namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  throw SchemaError("solution document: " + path + " " + what);
}

const json& field(const json& object, const std::string& path, const char* key) {
  if (!object.is_object()) schema_fail(path, "must be an object");
  auto it = object.find(key);
  if (it == object.end()) schema_fail(path + "." + key, "is missing");
  return *it;
}

double number(const json& object, const std::string& path, const char* key) {
  const json& v = field(object, path, key);
  if (!v.is_number()) schema_fail(path + "." + key, "must be a number");
  return v.get<double>();
}

double optional_number(const json& object, const std::string& path, const char* key) {
  if (!object.contains(key)) return 0.0;
  return number(object, path, key);
}

std::int64_t integer(const json& object, const std::string& path, const char* key) {
  const json& v = field(object, path, key);
  if (!v.is_number_integer()) schema_fail(path + "." + key, "must be an integer");
  return v.get<std::int64_t>();
}

std::string text(const json& object, const std::string& path, const char* key) {
  const json& v = field(object, path, key);
  if (!v.is_string()) schema_fail(path + "." + key, "must be a string");
  return v.get<std::string>();
}

const json& array(const json& object, const std::string& path, const char* key) {
  const json& v = field(object, path, key);
  if (!v.is_array()) schema_fail(path + "." + key, "must be an array");
  return v;
}

template <typename Parse>
auto enumerated(const json& object, const std::string& path, const char* key, Parse parse) {
  const std::string value = text(object, path, key);
  try {
    return parse(value);
  } catch (const std::invalid_argument&) {
    schema_fail(path + "." + key, "has unknown value '" + value + "'");
  }
}

json to_json(const SolutionDocument& d) {
  json params = {
      {"alpha", d.params.alpha},
      {"beta", d.params.beta},
      {"p", d.params.p_target},
      {"radius_coeff", d.params.radius_coeff},
      {"propagation", to_string(d.params.propagation)},
      {"separation", to_string(d.params.separation)},
      {"tau_mode", to_string(d.params.tau_mode)},
      {"solver", to_string(d.solver)},
  };
  json routes = json::array();
  for (const RouteRecord& r : d.routes) {
    json stops = json::array();
    for (const StopRecord& s : r.stops) {
      stops.push_back({{"node_id", to_int(s.node_id)},
                       {"arrival", s.arrival},
                       {"wait", s.wait},
                       {"service_start", s.service_start},
                       {"departure", s.departure}});
    }
    routes.push_back({{"vehicle", r.vehicle}, {"stops", std::move(stops)}});
  }
  json metrics = {
      {"total_distance", d.metrics.total_distance},
      {"num_vehicles", d.metrics.num_vehicles},
      {"total_duration", d.metrics.total_duration},
      {"total_travel", d.metrics.total_travel},
      {"total_wait", d.metrics.total_wait},
      {"total_service", d.metrics.total_service},
      {"tw_violations", d.metrics.tw_violations},
      {"capacity_violations", d.metrics.capacity_violations},
      {"feasible", d.metrics.feasible},
  };
  json timings = {
      {"coarsen_ms", d.timings.coarsen_ms},
      {"solve_ms", d.timings.solve_ms},
      {"inflate_ms", d.timings.inflate_ms},
  };
  json nodes = json::array();
  for (const NodeRecord& n : d.nodes) {
    nodes.push_back({{"id", to_int(n.id)}, {"x", n.x}, {"y", n.y}});
  }
  return {{"instance", d.instance}, {"seed", d.seed},         {"params", std::move(params)},
          {"routes", std::move(routes)}, {"metrics", std::move(metrics)},
          {"timings", std::move(timings)}, {"nodes", std::move(nodes)}};
}

SolutionDocument from_json(const json& j) {
  if (!j.is_object()) schema_fail("$", "must be an object");
  SolutionDocument d;
  d.instance = text(j, "$", "instance");
  const json& seed = field(j, "$", "seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
    schema_fail("$.seed", "must be a nonnegative integer");
  }
  d.seed = seed.get<std::uint64_t>();

  const json& params = field(j, "$", "params");
  d.params.alpha = number(params, "$.params", "alpha");
  d.params.beta = number(params, "$.params", "beta");
  d.params.p_target = number(params, "$.params", "p");
  d.params.radius_coeff = number(params, "$.params", "radius_coeff");
  d.params.propagation = enumerated(params, "$.params", "propagation", parse_propagation);
  d.solver = enumerated(params, "$.params", "solver", parse_solver);
  if (params.contains("separation")) {
    d.params.separation = enumerated(params, "$.params", "separation", parse_separation);
  }
  if (params.contains("tau_mode")) {
    d.params.tau_mode = enumerated(params, "$.params", "tau_mode", parse_tau_mode);
  }

  const json& routes = array(j, "$", "routes");
  for (std::size_t r = 0; r < routes.size(); ++r) {
    const std::string path = "$.routes[" + std::to_string(r) + "]";
    RouteRecord route;
    route.vehicle = static_cast<int>(integer(routes[r], path, "vehicle"));
    const json& stops = array(routes[r], path, "stops");
    if (stops.size() < 2) schema_fail(path + ".stops", "needs at least the two depot visits");
    for (std::size_t s = 0; s < stops.size(); ++s) {
      const std::string stop_path = path + ".stops[" + std::to_string(s) + "]";
      StopRecord stop;
      stop.node_id = NodeId{static_cast<std::int32_t>(integer(stops[s], stop_path, "node_id"))};
      stop.arrival = number(stops[s], stop_path, "arrival");
      stop.wait = number(stops[s], stop_path, "wait");
      stop.service_start = number(stops[s], stop_path, "service_start");
      stop.departure = number(stops[s], stop_path, "departure");
      route.stops.push_back(stop);
    }
    d.routes.push_back(std::move(route));
  }

  const json& metrics = field(j, "$", "metrics");
  d.metrics.total_distance = number(metrics, "$.metrics", "total_distance");
  d.metrics.num_vehicles = static_cast<int>(integer(metrics, "$.metrics", "num_vehicles"));
  d.metrics.total_duration = number(metrics, "$.metrics", "total_duration");
  d.metrics.total_travel = optional_number(metrics, "$.metrics", "total_travel");
  d.metrics.total_wait = optional_number(metrics, "$.metrics", "total_wait");
  d.metrics.total_service = optional_number(metrics, "$.metrics", "total_service");
  d.metrics.tw_violations = static_cast<int>(integer(metrics, "$.metrics", "tw_violations"));
  d.metrics.capacity_violations =
      static_cast<int>(integer(metrics, "$.metrics", "capacity_violations"));
  const json& feasible = field(metrics, "$.metrics", "feasible");
  if (!feasible.is_boolean()) schema_fail("$.metrics.feasible", "must be a boolean");
  d.metrics.feasible = feasible.get<bool>();

  const json& timings = field(j, "$", "timings");
  d.timings.coarsen_ms = number(timings, "$.timings", "coarsen_ms");
  d.timings.solve_ms = number(timings, "$.timings", "solve_ms");
  d.timings.inflate_ms = number(timings, "$.timings", "inflate_ms");

  if (j.contains("nodes")) {
    const json& nodes = array(j, "$", "nodes");
    std::unordered_set<NodeId> seen;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const std::string path = "$.nodes[" + std::to_string(k) + "]";
      NodeRecord node;
      node.id = NodeId{static_cast<std::int32_t>(integer(nodes[k], path, "id"))};
      node.x = number(nodes[k], path, "x");
      node.y = number(nodes[k], path, "y");
      if (!seen.insert(node.id).second) schema_fail(path + ".id", "is duplicated");
      d.nodes.push_back(node);
    }
  }
  return d;
}

}  // namespace

SolutionDocument make_document(std::string instance, std::uint64_t seed,
                               const CoarseningParams& params, SolverKind solver,
                               const Solution& solution, const Metrics& metrics,
                               const StageTimings& timings, const Graph& graph) {
  SolutionDocument d;
  d.instance = std::move(instance);
  d.seed = seed;
  d.params = params;
  d.solver = solver;
  d.metrics = metrics;
  d.timings = timings;
  int vehicle = 0;
  for (const Route& stored : solution.routes) {
    if (stored.empty()) continue;
    const Route route = recompute_schedule(stored, graph);
    RouteRecord record;
    record.vehicle = ++vehicle;
    for (std::size_t k = 0; k < route.stops.size(); ++k) {
      const StopTiming& t = route.schedule[k];
      record.stops.push_back({route.stops[k], t.arrival, t.wait, t.service_start, t.departure});
    }
    d.routes.push_back(std::move(record));
  }
  for (const CoarseNode& node : graph.nodes()) d.nodes.push_back({node.id, node.x, node.y});
  return d;
}

Solution to_solution(const SolutionDocument& document) {
  Solution solution;
  solution.solver = document.solver;
  for (const RouteRecord& record : document.routes) {
    Route route;
    for (const StopRecord& stop : record.stops) {
      route.stops.push_back(stop.node_id);
      route.schedule.push_back({stop.arrival, stop.wait, stop.service_start, stop.departure, false});
    }
    solution.routes.push_back(std::move(route));
  }
  return solution;
}

void write_solution(std::ostream& out, const SolutionDocument& document) {
  out << to_json(document).dump(2) << '\n';
  if (!out) throw IoError("failed to write solution document");
}

std::string write_solution(const SolutionDocument& document) {
  std::ostringstream out;
  write_solution(out, document);
  return out.str();
}

SolutionDocument read_solution(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("solution document is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

SolutionDocument read_solution(const std::string& text) {
  std::istringstream in(text);
  return read_solution(in);
}

bool same_structure(const SolutionDocument& a, const SolutionDocument& b) {
  return a.instance == b.instance && a.seed == b.seed && a.solver == b.solver &&
         a.routes == b.routes && a.metrics == b.metrics && a.nodes == b.nodes &&
         a.params.alpha == b.params.alpha && a.params.beta == b.params.beta &&
         a.params.p_target == b.params.p_target &&
         a.params.radius_coeff == b.params.radius_coeff &&
         a.params.propagation == b.params.propagation &&
         a.params.separation == b.params.separation && a.params.tau_mode == b.params.tau_mode;
}

}  // namespace stcvrp
