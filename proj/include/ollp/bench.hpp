#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ollp/format.hpp"
#include "ollp/geometry.hpp"
#include "ollp/instance.hpp"
#include "ollp/layout.hpp"
#include "ollp/optimizer.hpp"

namespace ollp::bench {

struct GeneratorOptions {
  double dim_min = 1.0;
  double dim_max = 10.0;
  double flow_density = 0.5;
  double flow_min = 1.0;
  double flow_max = 20.0;
};

/// Random instance, deterministic per (n, seed, options).
inline Instance generate_instance(std::size_t n, std::uint64_t seed, const GeneratorOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(opt.dim_min > 0.0 && opt.dim_max >= opt.dim_min)) throw std::invalid_argument("bad dimension range");
  if (!(opt.flow_min > 0.0 && opt.flow_max >= opt.flow_min)) throw std::invalid_argument("bad flow range");
  if (!(opt.flow_density >= 0.0 && opt.flow_density <= 1.0)) throw std::invalid_argument("bad flow density");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dim(opt.dim_min, opt.dim_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> flow(opt.flow_min, opt.flow_max);

  Instance inst;
  inst.name = "gen-n" + std::to_string(n) + "-s" + std::to_string(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = dim(rng);
    const double t = dim(rng);
    inst.specs.push_back({i, s, t});
  }
  inst.flows = FlowMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // Draw both values unconditionally so density does not shift the stream.
      const double u = unit(rng);
      const double f = flow(rng);
      if (u < opt.flow_density) inst.flows(i, j) = f;
    }
  }
  return inst;
}

/// Convex hull by monotone chain, counterclockwise, collinear points dropped.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline double polygon_area(const std::vector<Point>& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point a = poly[i], b = poly[(i + 1) % poly.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * std::abs(twice);
}

inline double polygon_perimeter(const std::vector<Point>& poly) {
  if (poly.size() < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) total += distance(poly[i], poly[(i + 1) % poly.size()]);
  return total;
}

inline double occupied_area(const Layout& layout) {
  double a = 0.0;
  for (const RectangleSpec& s : layout.specs) a += s.s * s.t;
  return a;
}

/// Convex-hull area over axis-aligned bounding-box area, both over all corners.
inline double hull_efficiency(const Layout& layout) {
  const std::vector<Point> corners = layout_corners(layout);
  return polygon_area(convex_hull(corners)) / bounding_box(corners).area();
}

/// Convex-hull perimeter over the summed cell areas.
inline double perimeter_efficiency(const Layout& layout) {
  return polygon_perimeter(convex_hull(layout_corners(layout))) / occupied_area(layout);
}

struct MetricsRecord {
  double objective = 0.0;
  double perimeter_efficiency = 0.0;
  double hull_efficiency = 0.0;
  AxisRect bounding_box;
  double hull_area = 0.0;
  double occupied_area = 0.0;
};

inline MetricsRecord compute_metrics(const Layout& layout, double objective) {
  const std::vector<Point> corners = layout_corners(layout);
  const std::vector<Point> hull = convex_hull(corners);
  MetricsRecord m;
  m.objective = objective;
  m.bounding_box = bounding_box(corners);
  m.hull_area = polygon_area(hull);
  m.occupied_area = occupied_area(layout);
  m.hull_efficiency = m.hull_area / m.bounding_box.area();
  m.perimeter_efficiency = polygon_perimeter(hull) / m.occupied_area;
  return m;
}

struct SummaryRow {
  std::string instance;
  std::string algo;
  double mean_best = 0.0;
  double min_best = 0.0;
  double runtime_ms = 0.0;

  /// "mean (min)"
  std::string text() const { return format_number(mean_best) + " (" + format_number(min_best) + ")"; }
};

inline SummaryRow summarize(const std::string& instance, const std::vector<opt::RunTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("summarize needs at least one trace");
  SummaryRow row;
  row.instance = instance;
  row.algo = std::string(opt::to_string(traces.front().algo));
  double sum = 0.0;
  row.min_best = traces.front().best_fitness;
  for (const opt::RunTrace& t : traces) {
    sum += t.best_fitness;
    row.min_best = std::min(row.min_best, t.best_fitness);
    row.runtime_ms += t.elapsed_ms;
  }
  row.mean_best = sum / static_cast<double>(traces.size());
  return row;
}

inline constexpr const char* kResultsHeader = "instance,algo,seed,best,mean_gen_time_ms,evaluations";
inline constexpr const char* kMetricsHeader = "instance,algo,seed,objective,perimeter_eff,hull_eff";
inline constexpr const char* kTraceHeader = "generation,best_fitness,mean_fitness,evaluations";
inline constexpr const char* kSummaryHeader = "instance,algo,mean_best,min_best,average_best,runtime_ms";

inline std::string results_row(const std::string& instance, const opt::RunTrace& t) {
  std::ostringstream os;
  os << instance << ',' << opt::to_string(t.algo) << ',' << t.seed << ',' << format_number(t.best_fitness) << ','
     << format_number(t.mean_generation_ms()) << ',' << t.evaluations();
  return os.str();
}

inline std::string metrics_row(const std::string& instance, const std::string& algo, const std::string& seed,
                               const MetricsRecord& m) {
  std::ostringstream os;
  os << instance << ',' << algo << ',' << seed << ',' << format_number(m.objective) << ','
     << format_number(m.perimeter_efficiency) << ',' << format_number(m.hull_efficiency);
  return os.str();
}

/// Per-generation trace; contains no timing so reruns are byte-identical.
inline std::string trace_csv(const opt::RunTrace& t) {
  std::ostringstream os;
  os << kTraceHeader << '\n';
  for (const opt::GenerationRecord& r : t.records) {
    os << r.generation << ',' << format_number(r.best_fitness) << ',' << format_number(r.mean_fitness) << ','
       << r.evaluations << '\n';
  }
  return os.str();
}

inline std::string summary_row(const SummaryRow& row) {
  std::ostringstream os;
  os << row.instance << ',' << row.algo << ',' << format_number(row.mean_best) << ',' << format_number(row.min_best)
     << ",\"" << row.text() << "\"," << format_number(row.runtime_ms);
  return os.str();
}

}  // namespace ollp::bench
