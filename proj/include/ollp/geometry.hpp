#pragma once

#include <algorithm>
#include <array>
#include <cmath>

namespace ollp {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

struct Segment {
  Point a;
  Point b;

  Point midpoint() const { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
  double length() const { return distance(a, b); }
  bool degenerate() const { return a == b; }
};

struct AxisRect {
  Point min_corner;
  Point max_corner;

  double width() const { return max_corner.x - min_corner.x; }
  double height() const { return max_corner.y - min_corner.y; }
  double area() const { return width() * height(); }

  /// Rectangle moved inward by `margin` on every side. May come out inverted.
  AxisRect shrunk(double margin) const {
    return {{min_corner.x + margin, min_corner.y + margin},
            {max_corner.x - margin, max_corner.y - margin}};
  }

  friend bool operator==(const AxisRect&, const AxisRect&) = default;
};

namespace detail {

inline double abs_max(std::initializer_list<Point> pts) {
  double m = 1.0;
  for (const Point& p : pts) m = std::max({m, std::abs(p.x), std::abs(p.y)});
  return m;
}

}  // namespace detail

/// Relative tolerance applied to the magnitude of the inputs.
inline constexpr double kGeomRelTol = 1e-9;

/// Length tolerance for a set of points: 1e-9 x max |coordinate|, floored at 1.
inline double geom_tolerance(std::initializer_list<Point> pts) {
  return kGeomRelTol * detail::abs_max(pts);
}

/// Signed cross product of (q - p) and (r - p). Positive for a counterclockwise turn.
inline double orient(Point p, Point q, Point r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

/// Whether r lies in the bounding box of segment pq, within `eps`.
/// Only meaningful when p, q, r are collinear.
inline bool on_segment(Point p, Point q, Point r, double eps) {
  return std::min(p.x, q.x) - eps <= r.x && r.x <= std::max(p.x, q.x) + eps &&
         std::min(p.y, q.y) - eps <= r.y && r.y <= std::max(p.y, q.y) + eps;
}

inline bool on_segment(Point p, Point q, Point r) {
  return on_segment(p, q, r, geom_tolerance({p, q, r}));
}

namespace detail {

// orient() has units of length squared, so its zero band scales quadratically.
inline int orient_sign(Point p, Point q, Point r, double scale) {
  const double o = orient(p, q, r);
  const double band = kGeomRelTol * scale * scale;
  if (o > band) return 1;
  if (o < -band) return -1;
  return 0;
}

}  // namespace detail

/// Closed-segment intersection: true iff the two segments share at least one point.
inline bool segments_intersect(const Segment& s1, const Segment& s2) {
  const Point a = s1.a, b = s1.b, c = s2.a, d = s2.b;
  const double scale = detail::abs_max({a, b, c, d});
  const double eps = kGeomRelTol * scale;

  const int o1 = detail::orient_sign(a, b, c, scale);
  const int o2 = detail::orient_sign(a, b, d, scale);
  const int o3 = detail::orient_sign(c, d, a, scale);
  const int o4 = detail::orient_sign(c, d, b, scale);

  if (o1 * o2 < 0 && o3 * o4 < 0) return true;

  if (o1 == 0 && on_segment(a, b, c, eps)) return true;
  if (o2 == 0 && on_segment(a, b, d, eps)) return true;
  if (o3 == 0 && on_segment(c, d, a, eps)) return true;
  if (o4 == 0 && on_segment(c, d, b, eps)) return true;
  return false;
}

/// True iff p is inside `rect` with a margin greater than `buffer` from every edge.
inline bool point_strictly_inside(Point p, const AxisRect& rect, double buffer) {
  return p.x > rect.min_corner.x + buffer && p.x < rect.max_corner.x - buffer &&
         p.y > rect.min_corner.y + buffer && p.y < rect.max_corner.y - buffer;
}

namespace detail {

// Strict crossing: the segments cross at a point interior to both.
inline bool crosses_properly(Point a, Point b, Point c, Point d) {
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

}  // namespace detail

/// Whether segment `s` passes through the open interior of `rect` shrunk by
/// `buffer` on every side. Running along an edge or touching a corner is not a
/// crossing, so cell boundaries remain usable as corridors.
inline bool segment_crosses_interior(const Segment& s, const AxisRect& rect, double buffer) {
  const AxisRect inner = rect.shrunk(buffer);
  if (inner.width() <= 0.0 || inner.height() <= 0.0) return false;

  // Cheap reject on bounding boxes.
  if (std::max(s.a.x, s.b.x) <= inner.min_corner.x || std::min(s.a.x, s.b.x) >= inner.max_corner.x ||
      std::max(s.a.y, s.b.y) <= inner.min_corner.y || std::min(s.a.y, s.b.y) >= inner.max_corner.y) {
    return false;
  }

  if (s.degenerate()) return point_strictly_inside(s.a, rect, buffer);

  if (point_strictly_inside(s.a, rect, buffer) || point_strictly_inside(s.b, rect, buffer) ||
      point_strictly_inside(s.midpoint(), rect, buffer)) {
    return true;
  }

  const Point ll = inner.min_corner, ur = inner.max_corner;
  const Point lr{ur.x, ll.y}, ul{ll.x, ur.y};
  const std::array<Segment, 4> edges{{{ll, lr}, {lr, ur}, {ur, ul}, {ul, ll}}};
  for (const Segment& e : edges) {
    if (detail::crosses_properly(s.a, s.b, e.a, e.b)) return true;
  }

  // A segment entering and leaving exactly through corners of the shrunk rect
  // escapes the tests above. The part of s inside the open rect is an open
  // parameter interval bounded by crossings of the four supporting lines, so
  // probing the midpoint of every gap between consecutive crossings is exhaustive.
  std::array<double, 6> ts{0.0, 1.0};
  std::size_t count = 2;
  const double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  auto add = [&](double t) {
    if (t > 0.0 && t < 1.0) ts[count++] = t;
  };
  if (dx != 0.0) {
    add((inner.min_corner.x - s.a.x) / dx);
    add((inner.max_corner.x - s.a.x) / dx);
  }
  if (dy != 0.0) {
    add((inner.min_corner.y - s.a.y) / dy);
    add((inner.max_corner.y - s.a.y) / dy);
  }
  std::sort(ts.begin(), ts.begin() + static_cast<std::ptrdiff_t>(count));
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const double t = 0.5 * (ts[i] + ts[i + 1]);
    const Point p{s.a.x + t * dx, s.a.y + t * dy};
    if (point_strictly_inside(p, rect, buffer)) return true;
  }
  return false;
}

/// Axis-aligned bounding box of a non-empty range of points.
template <typename Range>
AxisRect bounding_box(const Range& points) {
  auto it = std::begin(points);
  AxisRect box{*it, *it};
  for (; it != std::end(points); ++it) {
    box.min_corner.x = std::min(box.min_corner.x, it->x);
    box.min_corner.y = std::min(box.min_corner.y, it->y);
    box.max_corner.x = std::max(box.max_corner.x, it->x);
    box.max_corner.y = std::max(box.max_corner.y, it->y);
  }
  return box;
}

}  // namespace ollp
