#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ollp/layout.hpp"

namespace ollp {

/// Dense n x n matrix of non-negative flows, row-major.
class FlowMatrix {
 public:
  FlowMatrix() = default;
  explicit FlowMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  bool all_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return v == 0.0; });
  }

  friend bool operator==(const FlowMatrix&, const FlowMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct Instance {
  std::string name;
  std::vector<RectangleSpec> specs;
  FlowMatrix flows;

  std::size_t size() const { return specs.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws std::invalid_argument describing the first broken invariant.
inline void validate(const Instance& inst) {
  const std::size_t n = inst.size();
  if (n == 0) throw std::invalid_argument("instance has no cells");
  if (inst.flows.size() != n) {
    throw std::invalid_argument("flow matrix is " + std::to_string(inst.flows.size()) + "x" +
                                std::to_string(inst.flows.size()) + " but instance has " + std::to_string(n) +
                                " cells");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.specs[i].id != i) throw std::invalid_argument("cell " + std::to_string(i) + " has id " +
                                                           std::to_string(inst.specs[i].id));
    if (!valid(inst.specs[i])) throw std::invalid_argument("cell " + std::to_string(i) + " has non-positive size");
    for (std::size_t j = 0; j < n; ++j) {
      const double f = inst.flows(i, j);
      if (!std::isfinite(f) || f < 0.0) {
        throw std::invalid_argument("flow[" + std::to_string(i) + "][" + std::to_string(j) + "] is negative");
      }
      if (i == j && f != 0.0) throw std::invalid_argument("flow diagonal entry " + std::to_string(i) + " is nonzero");
    }
  }
}

/// Characteristic length of an instance: the diagonal of the square whose side
/// fits every cell laid end to end by its longer edge. All scale-relative
/// tolerances and penalties derive from this value.
inline double instance_scale(const std::vector<RectangleSpec>& specs) {
  double side = 0.0;
  for (const RectangleSpec& s : specs) side += std::max(s.s, s.t);
  return std::max(1.0, std::sqrt(2.0) * side);
}

inline double instance_scale(const Instance& inst) { return instance_scale(inst.specs); }

}  // namespace ollp
