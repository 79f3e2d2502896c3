#pragma once

#include <string>

#include "stcvrp/solution_io.hpp"

namespace stcvrp {

/// Maps instance coordinates to SVG user space:
///   sx = margin + (x - min_x) * scale
///   sy = height - margin - (y - min_y) * scale
/// The y axis is flipped so the plot reads like the usual Cartesian chart.
struct Viewport {
  double min_x = 0.0;
  double min_y = 0.0;
  double scale = 1.0;
  double margin = 0.0;
  double width = 0.0;
  double height = 0.0;

  [[nodiscard]] double to_x(double x) const { return margin + (x - min_x) * scale; }
  [[nodiscard]] double to_y(double y) const { return height - margin - (y - min_y) * scale; }
};

Viewport fit_viewport(const SolutionDocument& document, double width, double height,
                      double margin);

/// Depot square, customer dots, one polyline per route and a legend with the
/// per-route distance. Throws SchemaError if a stop has no coordinates.
std::string render_svg(const SolutionDocument& document, double width = 800.0,
                       double height = 800.0);

}  // namespace stcvrp
