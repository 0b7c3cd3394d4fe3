#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cpo/center.hpp"
#include "cpo/error.hpp"
#include "cpo/obsdist.hpp"
#include "cpo/region.hpp"
#include "oracles.hpp"

namespace cpo {
namespace {

Unit unit_at(std::size_t cell, Point mean, std::size_t n = 4) {
  Unit u;
  u.id = {cell, -1};
  u.count = n;
  u.sum_x = mean.x * static_cast<double>(n);
  u.sum_y = mean.y * static_cast<double>(n);
  u.dense = true;
  return u;
}

Region region_of(std::size_t count) {
  Region r;
  for (std::size_t i = 0; i < count; ++i) r.units.push_back(i);
  return r;
}

std::vector<Polygon> detour_square() {
  return {Polygon({{0.5, -0.5}, {1.5, -0.5}, {1.5, 0.5}, {0.5, 0.5}})};
}

TEST(ClusterMean, Examples) {
  const std::vector<Point> pts{{0, 0}, {2, 0}, {0, 3}, {3, 0}};
  const std::vector<std::size_t> two{0, 1};
  EXPECT_EQ(cluster_mean(pts, two), (Point{1, 0}));
  const std::vector<std::size_t> one{2};
  EXPECT_EQ(cluster_mean(pts, one), (Point{0, 3}));
  const std::vector<std::size_t> three{0, 2, 3};
  EXPECT_EQ(cluster_mean(pts, three), (Point{1, 1}));
  EXPECT_THROW(cluster_mean(pts, {}), InputError);
}

TEST(UnitCost, Examples) {
  const VisibilityGraph none = build_visibility_graph({});
  const std::vector<Unit> single{unit_at(0, {1, 1})};
  EXPECT_DOUBLE_EQ(unit_cost(0, region_of(1), single, {}, none), 0.0);

  const std::vector<Unit> pair{unit_at(0, {0, 0}), unit_at(1, {3, 0})};
  EXPECT_DOUBLE_EQ(unit_cost(0, region_of(2), pair, {}, none), 9.0);
  EXPECT_DOUBLE_EQ(unit_cost(1, region_of(2), pair, {}, none), 9.0);

  const auto sq = detour_square();
  const VisibilityGraph g = build_visibility_graph(sq);
  const std::vector<Unit> around{unit_at(0, {0, 0}), unit_at(1, {2, 0})};
  const double d = 1 + std::sqrt(2.0);
  EXPECT_NEAR(unit_cost(0, region_of(2), around, sq, g), d * d, 1e-12);
  EXPECT_NEAR(unit_cost(1, region_of(2), around, sq, g), d * d, 1e-12);
}

TEST(UnitCost, MeanInsideObstacleIsRejected) {
  const auto sq = detour_square();
  const VisibilityGraph g = build_visibility_graph(sq);
  const std::vector<Unit> units{unit_at(0, {0, 0}), unit_at(1, {1, 0})};
  EXPECT_THROW(unit_cost(0, region_of(2), units, sq, g), InputError);
}

TEST(FindCenter, PlainMeanWithoutObstacles) {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {5, 5}};
  std::vector<Unit> units{unit_at(0, {0.5, 0}, 2), unit_at(1, {5, 5}, 1)};
  Region r = region_of(2);
  r.members = {0, 1, 2};
  const CenterResult c = find_center(r, units, pts, {}, build_visibility_graph({}));
  EXPECT_EQ(c.kind, CenterKind::PlainMean);
  EXPECT_EQ(c.center, (Point{2, 5.0 / 3}));
  EXPECT_FALSE(c.cost.has_value());
  EXPECT_EQ(to_string(c.kind), "plain-mean");
}

TEST(FindCenter, SingleUnitRegion) {
  const std::vector<Point> pts{{3, 3}, {3.2, 3}};
  const std::vector<Unit> units{unit_at(0, {3.1, 3}, 2)};
  Region r = region_of(1);
  r.members = {0, 1};
  const auto sq = detour_square();
  const CenterResult c = find_center(r, units, pts, sq, build_visibility_graph(sq));
  EXPECT_EQ(c.kind, CenterKind::PlainMean);
  EXPECT_NEAR(c.center.x, 3.1, 1e-15);
}

TEST(FindCenter, SymmetricBanksTieToSmallerUnit) {
  // Two mirror-image columns of unit means around a river segment; the
  // overall mean (0.5, 0.5) is in the river.
  const std::vector<Polygon> river{Polygon(oracle::box(0.45, 0.3, 0.55, 0.7))};
  const VisibilityGraph g = build_visibility_graph(river);
  std::vector<Unit> units;
  std::vector<Point> pts;
  Region r;
  std::size_t cell = 0;
  for (double x : {0.3, 0.7}) {
    for (double y : {0.2, 0.5, 0.8}) {
      units.push_back(unit_at(cell, {x, y}, 1));
      r.members.push_back(pts.size());
      pts.push_back({x, y});
      r.units.push_back(cell++);
    }
  }
  const CenterResult c = find_center(r, units, pts, river, g);
  EXPECT_EQ(c.kind, CenterKind::CostMinimizingUnitMean);
  EXPECT_EQ(to_string(c.kind), "cost-minimizing-cell-mean");
  ASSERT_TRUE(c.unit.has_value());
  // Brute force over all candidates; the east mirror of the winner ties.
  std::vector<double> costs;
  for (std::size_t k = 0; k < units.size(); ++k) costs.push_back(unit_cost(k, r, units, river, g));
  const double best = *std::min_element(costs.begin(), costs.end());
  std::size_t expected = 0;
  while (costs[expected] > best * (1 + 1e-12)) ++expected;
  EXPECT_EQ(*c.unit, expected);
  EXPECT_LT(*c.unit, 3u);
  EXPECT_NEAR(costs[*c.unit], costs[*c.unit + 3], 1e-12);
  EXPECT_EQ(c.center, units[*c.unit].mean());
  EXPECT_FALSE(point_strictly_inside_any(c.center, river));
}

struct CenterScene {
  std::vector<Polygon> obstacles;
  std::vector<Unit> units;
  std::vector<Point> points;
  Region region;
};

CenterScene shifted(const CenterScene& s, Point v, double scale) {
  CenterScene out;
  for (const Polygon& p : s.obstacles) {
    std::vector<Point> vs;
    for (Point q : p.vertices()) vs.push_back(q * scale + v);
    out.obstacles.emplace_back(vs);
  }
  for (Point p : s.points) out.points.push_back(p * scale + v);
  out.region = s.region;
  for (const Unit& u : s.units) {
    Unit w = u;
    w.sum_x = (u.sum_x / u.count * scale + v.x) * u.count;
    w.sum_y = (u.sum_y / u.count * scale + v.y) * u.count;
    out.units.push_back(w);
  }
  return out;
}

TEST(FindCenter, TranslationEquivarianceAndScaleInvariance) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    CenterScene s;
    const auto rings = oracle::random_convex_scene(rng, 2);
    s.obstacles = oracle::to_polygons(rings);
    for (std::size_t k = 0; k < 6; ++k) {
      const Point m = oracle::random_free_point(rng, rings, 0.01);
      s.units.push_back(unit_at(k, m, 1));
      s.points.push_back(m);
      s.region.units.push_back(k);
      s.region.members.push_back(k);
    }
    const CenterResult base = find_center(s.region, s.units, s.points, s.obstacles,
                                          build_visibility_graph(s.obstacles));
    const Point v{u(rng) * 10 - 5, u(rng) * 10 - 5};
    const CenterScene t = shifted(s, v, 1.0);
    const CenterResult moved = find_center(t.region, t.units, t.points, t.obstacles,
                                           build_visibility_graph(t.obstacles));
    EXPECT_EQ(moved.kind, base.kind);
    EXPECT_NEAR(moved.center.x, base.center.x + v.x, 1e-9);
    EXPECT_NEAR(moved.center.y, base.center.y + v.y, 1e-9);

    const CenterScene z = shifted(s, {0, 0}, 3.5);
    const CenterResult scaled = find_center(z.region, z.units, z.points, z.obstacles,
                                            build_visibility_graph(z.obstacles));
    EXPECT_EQ(scaled.kind, base.kind);
    EXPECT_EQ(scaled.unit, base.unit);
    if (base.cost) EXPECT_NEAR(*scaled.cost, *base.cost * 3.5 * 3.5, 1e-9 * *scaled.cost);
  }
}

TEST(FindCenter, ObstructedMeanAlwaysFallsBack) {
  // Means around a square whose centroid is the square's center.
  const auto sq = std::vector<Polygon>{Polygon(oracle::box(0.4, 0.4, 0.6, 0.6))};
  const VisibilityGraph g = build_visibility_graph(sq);
  CenterScene s;
  const Point ms[4] = {{0.2, 0.5}, {0.8, 0.5}, {0.5, 0.2}, {0.5, 0.85}};
  for (std::size_t k = 0; k < 4; ++k) {
    s.units.push_back(unit_at(k, ms[k], 1));
    s.points.push_back(ms[k]);
    s.region.units.push_back(k);
    s.region.members.push_back(k);
  }
  const CenterResult c = find_center(s.region, s.units, s.points, sq, g);
  EXPECT_EQ(c.kind, CenterKind::CostMinimizingUnitMean);
  EXPECT_FALSE(point_in_any(c.center, sq));
  // With unit sums only (no member list) the result is the same.
  s.region.members.clear();
  const CenterResult again = find_center(s.region, s.units, s.points, sq, g);
  EXPECT_EQ(again.center, c.center);
}

}  // namespace
}  // namespace cpo
