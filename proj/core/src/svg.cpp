#include "stcvrp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "stcvrp/error.hpp"
#include "stcvrp/graph.hpp"

namespace stcvrp {
namespace {

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", v);
  return buffer;
}

// Evenly spread hues, alternating lightness so neighbours differ.
std::string route_color(std::size_t k) {
  const double hue = std::fmod(static_cast<double>(k) * 137.508, 360.0);
  const int lightness = k % 2 == 0 ? 40 : 55;
  return "hsl(" + num(hue) + ",70%," + std::to_string(lightness) + "%)";
}

}  // namespace

Viewport fit_viewport(const SolutionDocument& document, double width, double height,
                      double margin) {
  Viewport v;
  v.width = width;
  v.height = height;
  v.margin = margin;
  if (document.nodes.empty()) return v;
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = max_x;
  v.min_x = std::numeric_limits<double>::infinity();
  v.min_y = v.min_x;
  for (const NodeRecord& n : document.nodes) {
    v.min_x = std::min(v.min_x, n.x);
    v.min_y = std::min(v.min_y, n.y);
    max_x = std::max(max_x, n.x);
    max_y = std::max(max_y, n.y);
  }
  const double span = std::max(max_x - v.min_x, max_y - v.min_y);
  const double usable = std::min(width, height) - 2.0 * margin;
  v.scale = span > 0.0 ? usable / span : 1.0;
  return v;
}

std::string render_svg(const SolutionDocument& document, double width, double height) {
  std::unordered_map<NodeId, const NodeRecord*> coords;
  for (const NodeRecord& n : document.nodes) coords.emplace(n.id, &n);
  auto at = [&](NodeId id) -> const NodeRecord& {
    auto it = coords.find(id);
    if (it == coords.end()) {
      throw SchemaError("solution document has no coordinates for node " + to_string(id));
    }
    return *it->second;
  };

  const Viewport view = fit_viewport(document, width, height, 40.0);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\""
      << " data-min-x=\"" << num(view.min_x) << "\" data-min-y=\"" << num(view.min_y)
      << "\" data-scale=\"" << view.scale << "\" data-margin=\"" << num(view.margin) << "\">\n";
  svg << "<title>" << document.instance << " (" << to_string(document.solver) << ")</title>\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t r = 0; r < document.routes.size(); ++r) {
    svg << "<polyline class=\"route\" fill=\"none\" stroke-width=\"1.5\" stroke=\""
        << route_color(r) << "\" points=\"";
    for (std::size_t k = 0; k < document.routes[r].stops.size(); ++k) {
      const NodeRecord& n = at(document.routes[r].stops[k].node_id);
      svg << (k ? " " : "") << num(view.to_x(n.x)) << ',' << num(view.to_y(n.y));
    }
    svg << "\"/>\n";
  }

  for (const NodeRecord& n : document.nodes) {
    if (n.id == kDepotId) continue;
    svg << "<circle class=\"customer\" cx=\"" << num(view.to_x(n.x)) << "\" cy=\""
        << num(view.to_y(n.y)) << "\" r=\"2.5\" fill=\"#333\"/>\n";
  }
  if (coords.contains(kDepotId)) {
    const NodeRecord& depot = at(kDepotId);
    svg << "<rect class=\"depot\" x=\"" << num(view.to_x(depot.x) - 6.0) << "\" y=\""
        << num(view.to_y(depot.y) - 6.0) << "\" width=\"12\" height=\"12\" fill=\"#d00\"/>\n";
  }

  double legend_y = 20.0;
  for (std::size_t r = 0; r < document.routes.size(); ++r) {
    double distance = 0.0;
    const auto& stops = document.routes[r].stops;
    for (std::size_t k = 1; k < stops.size(); ++k) {
      const NodeRecord& a = at(stops[k - 1].node_id);
      const NodeRecord& b = at(stops[k].node_id);
      distance += euclidean(a.x, a.y, b.x, b.y);
    }
    svg << "<text class=\"legend\" x=\"" << num(width - 150.0) << "\" y=\"" << num(legend_y)
        << "\" font-size=\"11\" fill=\"" << route_color(r) << "\">vehicle "
        << document.routes[r].vehicle << ": " << num(distance) << "</text>\n";
    legend_y += 13.0;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace stcvrp
