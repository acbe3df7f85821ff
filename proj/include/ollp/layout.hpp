#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ollp/geometry.hpp"

namespace ollp {

/// Cell dimensions. `t` is the length of the door-bearing edge, `s` the length
/// of the edge perpendicular to it.
struct RectangleSpec {
  std::size_t id = 0;
  double s = 1.0;
  double t = 1.0;

  friend bool operator==(const RectangleSpec&, const RectangleSpec&) = default;
};

inline bool valid(const RectangleSpec& spec) {
  return std::isfinite(spec.s) && std::isfinite(spec.t) && spec.s > 0.0 && spec.t > 0.0;
}

/// Side of the centroid the door faces. The default pose has the door below;
/// the other values are that pose rotated counterclockwise by 90, 180 and 270 degrees.
enum class DoorSide { Below = 0, Right = 1, Above = 2, Left = 3 };

inline constexpr std::array<DoorSide, 4> kAllDoorSides{DoorSide::Below, DoorSide::Right, DoorSide::Above,
                                                       DoorSide::Left};

inline std::string_view to_string(DoorSide side) {
  switch (side) {
    case DoorSide::Below: return "Below";
    case DoorSide::Right: return "Right";
    case DoorSide::Above: return "Above";
    case DoorSide::Left: return "Left";
  }
  return "Below";
}

inline std::optional<DoorSide> door_side_from_string(std::string_view text) {
  for (DoorSide side : kAllDoorSides) {
    if (text == to_string(side)) return side;
  }
  return std::nullopt;
}

/// Next side in the counterclockwise cycle Below -> Right -> Above -> Left.
inline DoorSide rotated_ccw(DoorSide side) {
  return static_cast<DoorSide>((static_cast<int>(side) + 1) % 4);
}

/// True when the door is beside the centroid (the cell lies "vertically").
inline bool door_is_lateral(DoorSide side) { return side == DoorSide::Right || side == DoorSide::Left; }

struct Placement {
  Point center;
  DoorSide door_side = DoorSide::Below;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Layout {
  std::vector<RectangleSpec> specs;
  std::vector<Placement> placements;

  std::size_t size() const { return specs.size(); }

  friend bool operator==(const Layout&, const Layout&) = default;
};

/// Corner order: upper-left, upper-right, lower-right, lower-left.
enum class NodeKind { Corner1 = 0, Corner2 = 1, Corner3 = 2, Corner4 = 3, Door = 4 };

inline constexpr std::size_t kNodesPerCell = 5;

struct CellNodes {
  std::array<Point, 4> corners;
  Point door;

  Point operator[](NodeKind kind) const {
    return kind == NodeKind::Door ? door : corners[static_cast<std::size_t>(kind)];
  }

  friend bool operator==(const CellNodes&, const CellNodes&) = default;
};

/// (half_width, half_height) of the cell in the given orientation.
inline std::pair<double, double> half_extents(const RectangleSpec& spec, DoorSide side) {
  if (door_is_lateral(side)) return {0.5 * spec.s, 0.5 * spec.t};
  return {0.5 * spec.t, 0.5 * spec.s};
}

inline AxisRect cell_rect(const RectangleSpec& spec, const Placement& place) {
  const auto [hw, hh] = half_extents(spec, place.door_side);
  return {{place.center.x - hw, place.center.y - hh}, {place.center.x + hw, place.center.y + hh}};
}

inline CellNodes cell_nodes(const RectangleSpec& spec, const Placement& place) {
  const auto [hw, hh] = half_extents(spec, place.door_side);
  const double a = place.center.x, b = place.center.y;
  CellNodes nodes;
  nodes.corners = {Point{a - hw, b + hh}, Point{a + hw, b + hh}, Point{a + hw, b - hh}, Point{a - hw, b - hh}};
  const double half_s = 0.5 * spec.s;
  switch (place.door_side) {
    case DoorSide::Below: nodes.door = {a, b - half_s}; break;
    case DoorSide::Right: nodes.door = {a + half_s, b}; break;
    case DoorSide::Above: nodes.door = {a, b + half_s}; break;
    case DoorSide::Left: nodes.door = {a - half_s, b}; break;
  }
  return nodes;
}

/// The two corners bounding the door-bearing edge.
inline std::array<NodeKind, 2> door_adjacent_corners(DoorSide side) {
  switch (side) {
    case DoorSide::Below: return {NodeKind::Corner3, NodeKind::Corner4};
    case DoorSide::Right: return {NodeKind::Corner2, NodeKind::Corner3};
    case DoorSide::Above: return {NodeKind::Corner1, NodeKind::Corner2};
    case DoorSide::Left: return {NodeKind::Corner1, NodeKind::Corner4};
  }
  return {NodeKind::Corner3, NodeKind::Corner4};
}

/// Open-interior intersection test. Shared edges and corners do not count.
inline bool overlaps(const RectangleSpec& a_spec, const Placement& a_pl, const RectangleSpec& b_spec,
                     const Placement& b_pl, double tol) {
  const auto [hwa, hha] = half_extents(a_spec, a_pl.door_side);
  const auto [hwb, hhb] = half_extents(b_spec, b_pl.door_side);
  return std::abs(a_pl.center.x - b_pl.center.x) < hwa + hwb - tol &&
         std::abs(a_pl.center.y - b_pl.center.y) < hha + hhb - tol;
}

inline bool layout_is_feasible(const Layout& layout, double tol) {
  if (layout.specs.size() != layout.placements.size()) {
    throw std::invalid_argument("layout specs and placements differ in length");
  }
  for (std::size_t i = 0; i < layout.size(); ++i) {
    for (std::size_t j = i + 1; j < layout.size(); ++j) {
      if (overlaps(layout.specs[i], layout.placements[i], layout.specs[j], layout.placements[j], tol)) {
        return false;
      }
    }
  }
  return true;
}

/// All 4n corners of a layout, cell by cell.
inline std::vector<Point> layout_corners(const Layout& layout) {
  std::vector<Point> pts;
  pts.reserve(4 * layout.size());
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const CellNodes nodes = cell_nodes(layout.specs[i], layout.placements[i]);
    pts.insert(pts.end(), nodes.corners.begin(), nodes.corners.end());
  }
  return pts;
}

}  // namespace ollp
