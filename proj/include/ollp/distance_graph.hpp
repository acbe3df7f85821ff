#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "ollp/encoding.hpp"
#include "ollp/geometry.hpp"
#include "ollp/instance.hpp"
#include "ollp/layout.hpp"

namespace ollp {

/// Marks node pairs with no connecting path.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct NodeId {
  std::size_t cell = 0;
  NodeKind kind = NodeKind::Door;

  std::size_t index() const { return kNodesPerCell * cell + static_cast<std::size_t>(kind); }
  static NodeId from_index(std::size_t idx) {
    return {idx / kNodesPerCell, static_cast<NodeKind>(idx % kNodesPerCell)};
  }
  static NodeId door(std::size_t cell) { return {cell, NodeKind::Door}; }

  friend bool operator==(const NodeId&, const NodeId&) = default;
};

/// Weighted graph over the 5n corner and door nodes of a layout. Missing
/// edges carry kUnreachable.
class VisibilityGraph {
 public:
  explicit VisibilityGraph(std::vector<Point> nodes)
      : nodes_(std::move(nodes)), weights_(nodes_.size() * nodes_.size(), kUnreachable) {
    for (std::size_t u = 0; u < nodes_.size(); ++u) weights_[u * nodes_.size() + u] = 0.0;
  }

  std::size_t node_count() const { return nodes_.size(); }
  Point position(std::size_t u) const { return nodes_[u]; }
  const std::vector<Point>& positions() const { return nodes_; }

  double weight(std::size_t u, std::size_t v) const { return weights_[u * nodes_.size() + v]; }
  bool has_edge(std::size_t u, std::size_t v) const { return u != v && weight(u, v) != kUnreachable; }

  void connect(std::size_t u, std::size_t v, double w) {
    weights_[u * nodes_.size() + v] = w;
    weights_[v * nodes_.size() + u] = w;
  }

  std::size_t edge_count() const {
    std::size_t count = 0;
    for (std::size_t u = 0; u < nodes_.size(); ++u)
      for (std::size_t v = u + 1; v < nodes_.size(); ++v) count += has_edge(u, v) ? 1 : 0;
    return count;
  }

 private:
  std::vector<Point> nodes_;
  std::vector<double> weights_;
};

/// True iff the straight segment crosses the buffered interior of no cell.
inline bool segment_is_clear(const Segment& seg, std::span<const AxisRect> cells, double buffer) {
  for (const AxisRect& r : cells) {
    if (segment_crosses_interior(seg, r, buffer)) return false;
  }
  return true;
}

/// Builds the visibility graph: cell perimeter edges, door-to-adjacent-corner
/// edges of length t/2, and straight edges between nodes of different cells
/// whenever the segment avoids every cell interior. Opposite corners of a cell
/// and a door with the far corners of its own cell are never joined directly.
inline VisibilityGraph build_adjacency(const Layout& layout, double buffer) {
  const std::size_t n = layout.size();
  std::vector<Point> nodes;
  nodes.reserve(kNodesPerCell * n);
  std::vector<AxisRect> rects;
  rects.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CellNodes cn = cell_nodes(layout.specs[i], layout.placements[i]);
    nodes.insert(nodes.end(), cn.corners.begin(), cn.corners.end());
    nodes.push_back(cn.door);
    rects.push_back(cell_rect(layout.specs[i], layout.placements[i]));
  }

  VisibilityGraph graph(std::move(nodes));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t u = NodeId{i, static_cast<NodeKind>(k)}.index();
      const std::size_t v = NodeId{i, static_cast<NodeKind>((k + 1) % 4)}.index();
      graph.connect(u, v, distance(graph.position(u), graph.position(v)));
    }
    const double half_t = 0.5 * layout.specs[i].t;
    for (NodeKind corner : door_adjacent_corners(layout.placements[i].door_side)) {
      graph.connect(NodeId::door(i).index(), NodeId{i, corner}.index(), half_t);
    }
  }

  const std::size_t total = graph.node_count();
  for (std::size_t u = 0; u < total; ++u) {
    const std::size_t cell_u = u / kNodesPerCell;
    for (std::size_t v = (cell_u + 1) * kNodesPerCell; v < total; ++v) {
      const Segment seg{graph.position(u), graph.position(v)};
      if (segment_is_clear(seg, rects, buffer)) graph.connect(u, v, seg.length());
    }
  }
  return graph;
}

/// Closed shortest-path distances with successor links for path recovery.
class DistanceMatrix {
 public:
  static constexpr std::size_t kNoSuccessor = std::numeric_limits<std::size_t>::max();

  explicit DistanceMatrix(std::size_t size)
      : size_(size), dist_(size * size, kUnreachable), next_(size * size, kNoSuccessor) {}

  std::size_t size() const { return size_; }
  double operator()(std::size_t u, std::size_t v) const { return dist_[u * size_ + v]; }
  bool reachable(std::size_t u, std::size_t v) const { return (*this)(u, v) != kUnreachable; }

  /// Node sequence of a shortest u -> v path; empty when unreachable.
  std::vector<std::size_t> path(std::size_t u, std::size_t v) const {
    if (!reachable(u, v)) return {};
    std::vector<std::size_t> out{u};
    while (u != v) {
      u = next_[u * size_ + v];
      out.push_back(u);
    }
    return out;
  }

 private:
  friend DistanceMatrix all_pairs_shortest(const VisibilityGraph& graph);

  std::size_t size_;
  std::vector<double> dist_;
  std::vector<std::size_t> next_;
};

/// Floyd-Warshall closure over non-negative weights.
inline DistanceMatrix all_pairs_shortest(const VisibilityGraph& graph) {
  const std::size_t m = graph.node_count();
  DistanceMatrix out(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const double w = graph.weight(u, v);
      out.dist_[u * m + v] = w;
      if (w != kUnreachable) out.next_[u * m + v] = v;
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    const double* row_k = &out.dist_[k * m];
    for (std::size_t i = 0; i < m; ++i) {
      const double d_ik = out.dist_[i * m + k];
      if (d_ik == kUnreachable) continue;
      double* row_i = &out.dist_[i * m];
      std::size_t* next_i = &out.next_[i * m];
      const std::size_t via = next_i[k];
      for (std::size_t j = 0; j < m; ++j) {
        const double cand = d_ik + row_k[j];
        if (cand < row_i[j]) {
          row_i[j] = cand;
          next_i[j] = via;
        }
      }
    }
  }
  return out;
}

/// Sum over ordered cell pairs of flow x door-to-door distance. Pairs with
/// positive flow and no path contribute `unreachable_penalty` in place of a distance.
inline double objective(const DistanceMatrix& dist, const FlowMatrix& flows, double unreachable_penalty) {
  const std::size_t n = flows.size();
  double z = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double f = flows(i, j);
      if (f == 0.0 || i == j) continue;
      const double d = dist(NodeId::door(i).index(), NodeId::door(j).index());
      z += f * (d == kUnreachable ? unreachable_penalty : d);
    }
  }
  return z;
}

struct EvalConfig {
  DecodeOptions decode;
  double buffer = 1e-7;
  double unreachable_penalty = 1e6;

  /// buffer = 1e-7 x scale, penalty = 1e6 x scale.
  static EvalConfig for_specs(const std::vector<RectangleSpec>& specs) {
    const double scale = instance_scale(specs);
    EvalConfig cfg;
    cfg.decode = DecodeOptions::for_specs(specs);
    cfg.buffer = 1e-7 * scale;
    cfg.unreachable_penalty = 1e6 * scale;
    return cfg;
  }
  static EvalConfig for_instance(const Instance& inst) { return for_specs(inst.specs); }
};

inline double evaluate_layout(const Layout& layout, const FlowMatrix& flows, const EvalConfig& cfg) {
  if (flows.all_zero()) return 0.0;
  return objective(all_pairs_shortest(build_adjacency(layout, cfg.buffer)), flows, cfg.unreachable_penalty);
}

/// Fitness of a chromosome: decode, build the graph, close it, weigh by flows.
inline double evaluate(std::span<const double> genes, const Instance& inst, const EvalConfig& cfg) {
  return evaluate_layout(decode(genes, inst.specs, cfg.decode), inst.flows, cfg);
}

}  // namespace ollp
