#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "ollp/distance_graph.hpp"
#include "ollp/format.hpp"
#include "ollp/instance.hpp"
#include "ollp/layout.hpp"

namespace ollp::svg {

// Drawing coordinates only need to be exact to well below a pixel; rounding
// hides float noise and the -0 that flipping the y axis produces.
inline std::string coord(double v) {
  const double r = std::round(v * 1e9) / 1e9;
  return format_number(r == 0.0 ? 0.0 : r);
}

struct RenderOptions {
  bool show_paths = false;
  double buffer = 1e-7;
};

/// SVG drawing of a layout: one outlined rect per cell, a double tick across
/// each door, and optionally one dashed polyline per flow-connected cell pair
/// along its shortest door-to-door route. The y axis points up in layout space.
inline std::string render(const Layout& layout, const FlowMatrix& flows, const RenderOptions& opts) {
  const std::vector<Point> corners = layout_corners(layout);
  const AxisRect box = bounding_box(corners);
  const double w = std::max(box.width(), 1e-9), h = std::max(box.height(), 1e-9);
  const double mx = 0.05 * w, my = 0.05 * h;
  const double stroke = 0.004 * std::max(w, h);
  const double tick = 0.02 * std::max(w, h);
  auto X = [](double x) { return coord(x); };
  auto Y = [](double y) { return coord(-y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << X(box.min_corner.x - mx) << ' '
     << Y(box.max_corner.y + my) << ' ' << coord(w + 2 * mx) << ' ' << coord(h + 2 * my) << "\">\n";

  for (std::size_t i = 0; i < layout.size(); ++i) {
    const AxisRect r = cell_rect(layout.specs[i], layout.placements[i]);
    os << "  <rect class=\"cell\" data-id=\"" << i << "\" x=\"" << X(r.min_corner.x) << "\" y=\""
       << Y(r.max_corner.y) << "\" width=\"" << coord(r.width()) << "\" height=\""
       << coord(r.height()) << "\" fill=\"#eef2f7\" stroke=\"#223\" stroke-width=\"" << coord(stroke)
       << "\"/>\n";
  }

  for (std::size_t i = 0; i < layout.size(); ++i) {
    const CellNodes nodes = cell_nodes(layout.specs[i], layout.placements[i]);
    const bool lateral = door_is_lateral(layout.placements[i].door_side);
    // Ticks run across the door edge; the pair straddles the door point.
    const Point along = lateral ? Point{0.0, 1.0} : Point{1.0, 0.0};
    const Point across = lateral ? Point{1.0, 0.0} : Point{0.0, 1.0};
    std::ostringstream d;
    for (double offset : {-0.35 * tick, 0.35 * tick}) {
      const Point c = nodes.door + offset * along;
      const Point a = c - (0.5 * tick) * across, b = c + (0.5 * tick) * across;
      d << 'M' << X(a.x) << ',' << Y(a.y) << " L" << X(b.x) << ',' << Y(b.y) << ' ';
    }
    std::string path = d.str();
    path.pop_back();
    os << "  <path class=\"door\" data-id=\"" << i << "\" d=\"" << path << "\" stroke=\"#c21\" stroke-width=\""
       << coord(stroke) << "\" fill=\"none\"/>\n";
  }

  if (opts.show_paths && !flows.all_zero()) {
    const VisibilityGraph graph = build_adjacency(layout, opts.buffer);
    const DistanceMatrix dist = all_pairs_shortest(graph);
    for (std::size_t i = 0; i < layout.size(); ++i) {
      for (std::size_t j = i + 1; j < layout.size(); ++j) {
        if (flows(i, j) + flows(j, i) <= 0.0) continue;
        const auto route = dist.path(NodeId::door(i).index(), NodeId::door(j).index());
        if (route.empty()) continue;
        os << "  <polyline class=\"flow\" data-from=\"" << i << "\" data-to=\"" << j << "\" points=\"";
        for (std::size_t k = 0; k < route.size(); ++k) {
          const Point p = graph.position(route[k]);
          os << (k ? " " : "") << X(p.x) << ',' << Y(p.y);
        }
        os << "\" fill=\"none\" stroke=\"#36c\" stroke-width=\"" << coord(stroke)
           << "\" stroke-dasharray=\"" << coord(3 * stroke) << ' ' << coord(2 * stroke)
           << "\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ollp::svg
