#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "ollp/instance.hpp"
#include "ollp/layout.hpp"

namespace ollp {

/// 3n genes in [0,1]: n insertion-order keys, n rotation genes, n shift-angle
/// genes. Rotation and shift slots are indexed by cell id.
struct Chromosome {
  std::vector<double> genes;

  Chromosome() = default;
  explicit Chromosome(std::vector<double> g) : genes(std::move(g)) {}

  std::size_t cells() const { return genes.size() / 3; }
  std::span<const double> order_keys() const { return {genes.data(), cells()}; }
  std::span<const double> rotation_genes() const { return {genes.data() + cells(), cells()}; }
  std::span<const double> shift_genes() const { return {genes.data() + 2 * cells(), cells()}; }
};

inline double clamp_gene(double g) {
  if (!(g >= 0.0)) return 0.0;  // also maps NaN to 0
  return g > 1.0 ? 1.0 : g;
}

/// Cell indices sorted ascending by key; equal keys keep index order.
inline std::vector<std::size_t> decode_order(std::span<const double> keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  return order;
}

/// floor(4x) * 90 degrees, with x = 1 mapped to 270.
inline int decode_rotation(double x) {
  const int quarter = std::clamp(static_cast<int>(std::floor(4.0 * clamp_gene(x))), 0, 3);
  return quarter * 90;
}

inline DoorSide door_side_for_rotation(int degrees) {
  return static_cast<DoorSide>(((degrees / 90) % 4 + 4) % 4);
}

/// theta * 360 degrees, counterclockwise from +x.
inline double decode_shift_angle(double theta) { return clamp_gene(theta) * 360.0; }

/// Unit vector for an angle in degrees; exact on the axes.
inline Point direction_vector(double degrees) {
  const double q = degrees / 90.0;
  if (q == std::floor(q)) {
    switch (((static_cast<long long>(q) % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  const double rad = degrees * std::acos(-1.0) / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

/// Step control for the ray search: march by `step`, then bisect the last
/// bracket down to `refine_tol`.
struct ShiftControl {
  double step = 0.25;
  double refine_tol = 1e-6;
};

struct DecodeOptions {
  double overlap_tol = 1e-9;
  ShiftControl shift;

  /// Scale-relative defaults: tol = 1e-9 x scale, refine = 1e-6 x scale,
  /// step = 0.25 x the smallest cell dimension.
  static DecodeOptions for_specs(const std::vector<RectangleSpec>& specs) {
    const double scale = instance_scale(specs);
    double min_dim = std::numeric_limits<double>::infinity();
    for (const RectangleSpec& s : specs) min_dim = std::min({min_dim, s.s, s.t});
    DecodeOptions opts;
    opts.overlap_tol = 1e-9 * scale;
    opts.shift.refine_tol = 1e-6 * scale;
    opts.shift.step = 0.25 * min_dim;
    return opts;
  }
};

namespace detail {

inline bool fits(const RectangleSpec& spec, const Placement& candidate, std::span<const RectangleSpec> placed_specs,
                 std::span<const Placement> placed, double tol) {
  for (std::size_t k = 0; k < placed.size(); ++k) {
    if (overlaps(spec, candidate, placed_specs[k], placed[k], tol)) return false;
  }
  return true;
}

}  // namespace detail

/// Pushes a cell from the origin along `direction_deg` until it overlaps none
/// of the placed cells. Returns the first feasible position found by marching,
/// refined by bisection against the preceding infeasible one.
inline Placement place_by_shifting(const RectangleSpec& spec, DoorSide side, double direction_deg,
                                   std::span<const RectangleSpec> placed_specs, std::span<const Placement> placed,
                                   double tol, const ShiftControl& ctrl) {
  if (placed_specs.size() != placed.size()) throw std::invalid_argument("placed specs/placements mismatch");
  if (!(ctrl.step > 0.0) || !(ctrl.refine_tol > 0.0)) throw std::invalid_argument("shift control must be positive");

  const Point dir = direction_vector(direction_deg);
  auto at = [&](double dist) { return Placement{dist * dir, side}; };

  Placement candidate = at(0.0);
  if (detail::fits(spec, candidate, placed_specs, placed, tol)) return candidate;

  double lo = 0.0;
  double hi = ctrl.step;
  while (!detail::fits(spec, at(hi), placed_specs, placed, tol)) {
    lo = hi;
    hi += ctrl.step;
  }
  while (hi - lo > ctrl.refine_tol) {
    const double mid = 0.5 * (lo + hi);
    if (detail::fits(spec, at(mid), placed_specs, placed, tol)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return at(hi);
}

/// Greedy decoder: cells are inserted in key order, each rotated by its
/// rotation gene and shifted along its shift-angle ray until it fits.
inline Layout decode(std::span<const double> raw_genes, const std::vector<RectangleSpec>& specs,
                     const DecodeOptions& opts) {
  const std::size_t n = specs.size();
  if (raw_genes.size() != 3 * n) {
    throw std::invalid_argument("chromosome has " + std::to_string(raw_genes.size()) + " genes, expected " +
                                std::to_string(3 * n));
  }
  std::vector<double> genes(raw_genes.begin(), raw_genes.end());
  std::transform(genes.begin(), genes.end(), genes.begin(), clamp_gene);
  const Chromosome chrom{std::move(genes)};

  const std::vector<std::size_t> order = decode_order(chrom.order_keys());

  std::vector<RectangleSpec> placed_specs;
  std::vector<Placement> placed;
  placed_specs.reserve(n);
  placed.reserve(n);

  Layout layout;
  layout.specs = specs;
  layout.placements.resize(n);

  for (std::size_t cell : order) {
    const DoorSide side = door_side_for_rotation(decode_rotation(chrom.rotation_genes()[cell]));
    const double angle = decode_shift_angle(chrom.shift_genes()[cell]);
    const Placement p =
        place_by_shifting(specs[cell], side, angle, placed_specs, placed, opts.overlap_tol, opts.shift);
    layout.placements[cell] = p;
    placed_specs.push_back(specs[cell]);
    placed.push_back(p);
  }
  return layout;
}

inline Layout decode(std::span<const double> genes, const Instance& inst) {
  return decode(genes, inst.specs, DecodeOptions::for_specs(inst.specs));
}

}  // namespace ollp
