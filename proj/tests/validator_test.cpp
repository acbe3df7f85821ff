#include "ollp/validator.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

namespace {

using ollp::DoorSide;
using ollp::Layout;
namespace val = ollp::validator;

Layout two(double s, double t, ollp::Point a, DoorSide sa, ollp::Point b, DoorSide sb) {
  return {{{0, s, t}, {1, s, t}}, {{a, sa}, {b, sb}}};
}

Layout random_placed(std::size_t n, std::mt19937_64& rng, double spread) {
  // Coordinates on a half-unit grid so edge contact is frequent.
  std::uniform_int_distribution<int> dim(1, 8), pos(-int(spread), int(spread)), side(0, 3);
  Layout layout;
  for (std::size_t i = 0; i < n; ++i) {
    layout.specs.push_back({i, dim(rng) * 0.5, dim(rng) * 0.5});
    layout.placements.push_back({{pos(rng) * 0.5, pos(rng) * 0.5}, static_cast<DoorSide>(side(rng))});
  }
  return layout;
}

TEST(CheckNonOverlap, TouchingPairIsClean) {
  EXPECT_TRUE(val::check_non_overlap(two(2, 4, {0, 0}, DoorSide::Below, {4, 0}, DoorSide::Below), 1e-9).empty());
  EXPECT_TRUE(val::check_non_overlap(two(2, 4, {0, 0}, DoorSide::Right, {0, 4}, DoorSide::Left), 1e-9).empty());
}

TEST(CheckNonOverlap, CoincidentCellsReportFullDepth) {
  const auto report = val::check_non_overlap(two(2, 4, {0, 0}, DoorSide::Below, {0, 0}, DoorSide::Below), 1e-9);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report.violations[0].family, val::Family::NonOverlap);
  EXPECT_EQ(report.violations[0].first, 0u);
  EXPECT_EQ(report.violations[0].second, 1u);
  // 4 wide x 2 tall: the shallower axis decides.
  EXPECT_DOUBLE_EQ(report.violations[0].magnitude, 2.0);
}

TEST(CheckNonOverlap, EquivalentToLayoutFeasibility) {
  std::mt19937_64 rng(41);
  int infeasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Layout layout = random_placed(2 + trial % 6, rng, 12);
    const bool feasible = ollp::layout_is_feasible(layout, 1e-9);
    infeasible += feasible ? 0 : 1;
    EXPECT_EQ(val::check_non_overlap(layout, 1e-9).empty(), feasible) << "trial " << trial;
  }
  EXPECT_GT(infeasible, 100);
  EXPECT_LT(infeasible, 900);
}

TEST(CheckNodeCoordinates, LayoutExamplesAreClean) {
  const Layout layout{{{0, 2, 4}, {1, 2, 4}, {2, 2, 4}, {3, 3, 3}},
                      {{{0, 0}, DoorSide::Below}, {{0, 0}, DoorSide::Right}, {{5, 3}, DoorSide::Above},
                       {{-7, 1}, DoorSide::Left}}};
  EXPECT_TRUE(val::check_node_coordinates(layout).empty());
  const auto want = val::expected_nodes(layout.specs[0], layout.placements[0]);
  EXPECT_EQ(want[4], (ollp::Point{0, -1}));
  EXPECT_EQ(want[0], (ollp::Point{-2, 1}));
}

TEST(CheckNodeCoordinates, InjectedDoorFault) {
  const Layout layout{{{0, 2, 4}}, {{{0, 0}, DoorSide::Below}}};
  auto nodes = val::produced_nodes(layout);
  nodes[4].x += 0.1;
  const auto report = val::check_node_coordinates(layout, nodes);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_EQ(report.violations[0].first, 4u);
  EXPECT_NEAR(report.violations[0].magnitude, 0.1, 1e-12);
}

TEST(CheckNodeCoordinates, MissingNodesAreReported) {
  const Layout layout{{{0, 2, 4}}, {{{0, 0}, DoorSide::Below}}};
  std::vector<ollp::Point> partial(3);
  EXPECT_FALSE(val::check_node_coordinates(layout, partial).empty());
}

TEST(CheckNodeCoordinates, RandomFuzzAgreesWithLayoutModel) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> dim(0.01, 50), pos(-1e4, 1e4);
  std::uniform_int_distribution<int> side(0, 3);
  Layout layout;
  for (std::size_t i = 0; i < 10000; ++i) {
    layout.specs.push_back({i, dim(rng), dim(rng)});
    layout.placements.push_back({{pos(rng), pos(rng)}, static_cast<DoorSide>(side(rng))});
  }
  const auto report = val::check_node_coordinates(layout);
  EXPECT_TRUE(report.empty()) << report;
}

TEST(CheckCrossingPenalties, Examples) {
  const Layout block{{{0, 2, 4}}, {{{3, 0}, DoorSide::Right}}};
  EXPECT_TRUE(val::check_crossing_penalties(block, ollp::Segment{{1, 0}, {5, 0}}));
  EXPECT_FALSE(val::check_crossing_penalties(block, ollp::Segment{{10, 10}, {20, 10}}));
  // along an edge, and a corner touch
  EXPECT_FALSE(val::check_crossing_penalties(block, ollp::Segment{{0, 2}, {6, 2}}));
  EXPECT_FALSE(val::check_crossing_penalties(block, ollp::Segment{{0, 0}, {2, -2}}));
}

TEST(CheckCrossingPenalties, NodePairForm) {
  const Layout layout{{{0, 2, 2}, {1, 2, 2}, {2, 2, 4}},
                      {{{0, 0}, DoorSide::Right}, {{6, 0}, DoorSide::Left}, {{3, 0}, DoorSide::Right}}};
  EXPECT_TRUE(val::check_crossing_penalties(layout, 4, 9));
  // corner (1,1) of cell 0 to corner (2,2) of the blocker stays clear
  EXPECT_FALSE(val::check_crossing_penalties(layout, 1, 10));
}

TEST(CheckCrossingPenalties, AgreesWithOrientationTestAwayFromBoundaries) {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> pos(-20, 20), dim(1, 8);
  std::uniform_int_distribution<int> side(0, 3);
  Layout layout;
  for (std::size_t i = 0; i < 10; ++i) {
    layout.specs.push_back({i, dim(rng), dim(rng)});
    layout.placements.push_back({{pos(rng), pos(rng)}, static_cast<DoorSide>(side(rng))});
  }
  const double buffer = 1e-7;
  std::vector<ollp::AxisRect> rects;
  std::vector<ollp::Point> corners;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    rects.push_back(ollp::cell_rect(layout.specs[i], layout.placements[i]));
    const auto cn = ollp::cell_nodes(layout.specs[i], layout.placements[i]);
    corners.insert(corners.end(), cn.corners.begin(), cn.corners.end());
  }
  auto near_boundary = [&](ollp::Point p) {
    for (const auto& r : rects) {
      const double dx = std::max({r.min_corner.x - p.x, 0.0, p.x - r.max_corner.x});
      const double dy = std::max({r.min_corner.y - p.y, 0.0, p.y - r.max_corner.y});
      if (std::hypot(dx, dy) <= 4 * buffer) return true;
    }
    return false;
  };
  int compared = 0, crossing = 0;
  for (int k = 0; k < 20000; ++k) {
    const ollp::Segment seg{{pos(rng), pos(rng)}, {pos(rng), pos(rng)}};
    // Graph segments join boundary nodes, so endpoints never sit inside a cell.
    if (oracle::inside_any(seg.a, rects, 0.0) || oracle::inside_any(seg.b, rects, 0.0)) continue;
    if (near_boundary(seg.a) || near_boundary(seg.b)) continue;
    bool grazes_corner = false;
    for (const auto& c : corners) grazes_corner = grazes_corner || oracle::point_segment_distance(c, seg) <= 4 * buffer;
    if (grazes_corner) continue;
    ++compared;
    const bool parametric = val::check_crossing_penalties(layout, seg);
    crossing += parametric ? 1 : 0;
    EXPECT_EQ(parametric, !ollp::segment_is_clear(seg, rects, buffer)) << k;
  }
  EXPECT_GT(compared, 2000);
  EXPECT_GT(crossing, 500);
}

TEST(ViolationReport, Printing) {
  std::ostringstream os;
  os << val::ViolationReport{};
  EXPECT_EQ(os.str(), "no violations\n");
  std::ostringstream os2;
  os2 << val::ViolationReport{{{val::Family::NonOverlap, 0, 1, 2.0}}};
  EXPECT_EQ(os2.str(), "non_overlap 0 1 2\n");
}

}  // namespace
