#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ollp/geometry.hpp"
#include "ollp/layout.hpp"

// Feasibility checks written directly from the constraint algebra of the
// layout model (center distances, vertex coordinate formulas, parametric edge
// crossings). They deliberately avoid the helpers in layout.hpp and
// geometry.hpp that they are used to cross-check.

namespace ollp::validator {

enum class Family { NonOverlap, NodeCoordinates, Crossing };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::NonOverlap: return "non_overlap";
    case Family::NodeCoordinates: return "node_coordinates";
    case Family::Crossing: return "crossing";
  }
  return "unknown";
}

struct Violation {
  Family family = Family::NonOverlap;
  std::size_t first = 0;   ///< cell index, or node index for node families
  std::size_t second = 0;  ///< other cell / node index
  double magnitude = 0.0;  ///< length units
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const { return violations.empty(); }
  std::size_t size() const { return violations.size(); }
  void append(const ViolationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

inline std::ostream& operator<<(std::ostream& os, const ViolationReport& report) {
  if (report.empty()) return os << "no violations\n";
  for (const Violation& v : report.violations) {
    os << to_string(v.family) << ' ' << v.first << ' ' << v.second << ' ' << v.magnitude << '\n';
  }
  return os;
}

namespace detail {

struct Lambda {
  int below = 0, right = 0, above = 0, left = 0;
  int z() const { return right + left; }
};

inline Lambda lambda_of(DoorSide side) {
  Lambda l;
  switch (side) {
    case DoorSide::Below: l.below = 1; break;
    case DoorSide::Right: l.right = 1; break;
    case DoorSide::Above: l.above = 1; break;
    case DoorSide::Left: l.left = 1; break;
  }
  return l;
}

// Required center separation along x (resp. y) for a non-overlapping pair.
inline double horizontal_half(const RectangleSpec& c, DoorSide side) {
  const int z = lambda_of(side).z();
  return 0.5 * (1 - z) * c.t + 0.5 * z * c.s;
}

inline double vertical_half(const RectangleSpec& c, DoorSide side) {
  const int z = lambda_of(side).z();
  return 0.5 * (1 - z) * c.s + 0.5 * z * c.t;
}

}  // namespace detail

/// Pairwise separation: each pair must be apart by the sum of half edges on at
/// least one axis. Magnitude is the smaller of the two axis penetrations.
inline ViolationReport check_non_overlap(const Layout& layout, double tol) {
  ViolationReport report;
  const std::size_t n = layout.specs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Placement& pi = layout.placements[i];
      const Placement& pj = layout.placements[j];
      const double e = std::max(0.0, pi.center.x - pj.center.x);
      const double f = std::max(0.0, pj.center.x - pi.center.x);
      const double g = std::max(0.0, pi.center.y - pj.center.y);
      const double h = std::max(0.0, pj.center.y - pi.center.y);
      const double need_x = detail::horizontal_half(layout.specs[i], pi.door_side) +
                            detail::horizontal_half(layout.specs[j], pj.door_side);
      const double need_y = detail::vertical_half(layout.specs[i], pi.door_side) +
                            detail::vertical_half(layout.specs[j], pj.door_side);
      const double pen_x = need_x - (e + f);
      const double pen_y = need_y - (g + h);
      if (pen_x > tol && pen_y > tol) {
        report.violations.push_back({Family::NonOverlap, i, j, std::min(pen_x, pen_y)});
      }
    }
  }
  return report;
}

/// Node coordinates recomputed from center, dimensions and door indicators.
inline std::array<Point, 5> expected_nodes(const RectangleSpec& c, const Placement& p) {
  const detail::Lambda l = detail::lambda_of(p.door_side);
  const int z = l.z();
  const double a = p.center.x, b = p.center.y;
  const double x_left = a - 0.5 * (1 - z) * c.t - 0.5 * z * c.s;
  const double x_right = a + 0.5 * (1 - z) * c.t + 0.5 * z * c.s;
  const double y_top = b + 0.5 * (1 - z) * c.s + 0.5 * z * c.t;
  const double y_bottom = b - 0.5 * (1 - z) * c.s - 0.5 * z * c.t;
  return {Point{x_left, y_top}, Point{x_right, y_top}, Point{x_right, y_bottom}, Point{x_left, y_bottom},
          Point{a + (l.right - l.left) * 0.5 * c.s, b + (l.above - l.below) * 0.5 * c.s}};
}

/// Compares claimed node positions (5 per cell: 4 corners then the door)
/// against the closed-form coordinates, within 1e-12 relative.
inline ViolationReport check_node_coordinates(const Layout& layout, std::span<const Point> claimed) {
  ViolationReport report;
  for (std::size_t i = 0; i < layout.specs.size(); ++i) {
    const auto want = expected_nodes(layout.specs[i], layout.placements[i]);
    for (std::size_t k = 0; k < 5; ++k) {
      const std::size_t idx = 5 * i + k;
      if (idx >= claimed.size()) {
        report.violations.push_back({Family::NodeCoordinates, idx, idx, std::numeric_limits<double>::infinity()});
        continue;
      }
      const Point got = claimed[idx];
      const double err = std::hypot(got.x - want[k].x, got.y - want[k].y);
      const double scale = std::max({1.0, std::abs(want[k].x), std::abs(want[k].y)});
      if (!(err <= 1e-12 * scale)) report.violations.push_back({Family::NodeCoordinates, idx, idx, err});
    }
  }
  return report;
}

/// Node positions as produced by layout_model::cell_nodes, 5 per cell.
inline std::vector<Point> produced_nodes(const Layout& layout) {
  std::vector<Point> out;
  out.reserve(5 * layout.specs.size());
  for (std::size_t i = 0; i < layout.specs.size(); ++i) {
    const CellNodes cn = cell_nodes(layout.specs[i], layout.placements[i]);
    out.insert(out.end(), cn.corners.begin(), cn.corners.end());
    out.push_back(cn.door);
  }
  return out;
}

inline ViolationReport check_node_coordinates(const Layout& layout) {
  const std::vector<Point> nodes = produced_nodes(layout);
  return check_node_coordinates(layout, nodes);
}

namespace detail {

inline bool strictly_between(double v, double eps) { return v > eps && v < 1.0 - eps; }

// Segment P(gamma) = gamma * from + (1 - gamma) * to against the vertical edge
// x = ex spanning [ey_lo, ey_hi] with point delta * ey_hi + (1 - delta) * ey_lo.
inline bool crosses_vertical_edge(Point from, Point to, double ex, double ey_hi, double ey_lo, double eps) {
  const double dx = from.x - to.x;
  if (dx == 0.0) return false;  // parallel or collinear: corridor travel
  const double gamma = (ex - to.x) / dx;
  const double y = gamma * from.y + (1.0 - gamma) * to.y;
  const double delta = (y - ey_lo) / (ey_hi - ey_lo);
  const double len = std::hypot(dx, from.y - to.y);
  return strictly_between(gamma, eps / len) && strictly_between(delta, eps / (ey_hi - ey_lo));
}

inline bool crosses_horizontal_edge(Point from, Point to, double ey, double ex_hi, double ex_lo, double eps) {
  const double dy = from.y - to.y;
  if (dy == 0.0) return false;
  const double delta = (ey - to.y) / dy;
  const double x = delta * from.x + (1.0 - delta) * to.x;
  const double gamma = (x - ex_lo) / (ex_hi - ex_lo);
  const double len = std::hypot(from.x - to.x, dy);
  return strictly_between(delta, eps / len) && strictly_between(gamma, eps / (ex_hi - ex_lo));
}

}  // namespace detail

/// Whether the segment crosses the relative interior of any edge of any cell,
/// with both crossing parameters strictly inside (0, 1). Touching a corner or
/// running along an edge never counts.
inline bool check_crossing_penalties(const Layout& layout, const Segment& seg) {
  const Point from = seg.a, to = seg.b;
  if (from == to) return false;
  for (std::size_t p = 0; p < layout.specs.size(); ++p) {
    const auto v = expected_nodes(layout.specs[p], layout.placements[p]);
    const double eps = geom_tolerance({from, to, v[0], v[2]});
    // r = 1: right edge p2-p3; r = 3: left edge p1-p4
    if (detail::crosses_vertical_edge(from, to, v[1].x, v[1].y, v[2].y, eps)) return true;
    if (detail::crosses_vertical_edge(from, to, v[0].x, v[0].y, v[3].y, eps)) return true;
    // r = 2: bottom edge p4-p3; r = 4: top edge p1-p2
    if (detail::crosses_horizontal_edge(from, to, v[3].y, v[2].x, v[3].x, eps)) return true;
    if (detail::crosses_horizontal_edge(from, to, v[0].y, v[1].x, v[0].x, eps)) return true;
  }
  return false;
}

/// Node-pair form: nodes are indexed 5 * cell + k (corners 0..3, door 4).
inline bool check_crossing_penalties(const Layout& layout, std::size_t node_u, std::size_t node_v) {
  const auto a = expected_nodes(layout.specs[node_u / 5], layout.placements[node_u / 5]);
  const auto b = expected_nodes(layout.specs[node_v / 5], layout.placements[node_v / 5]);
  return check_crossing_penalties(layout, Segment{a[node_u % 5], b[node_v % 5]});
}

}  // namespace ollp::validator
