#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "cpo/error.hpp"
#include "cpo/io.hpp"
#include "cpo/pipeline.hpp"
#include "oracles.hpp"

namespace cpo {
namespace {

std::vector<std::size_t> all_indices(const ClusteringResult& r) {
  std::vector<std::size_t> out = r.noise;
  for (const Cluster& c : r.clusters) out.insert(out.end(), c.points.begin(), c.points.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_partition(const ClusteringResult& r, std::size_t n) {
  const auto idx = all_indices(r);
  if (idx.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (idx[i] != i) return false;
  }
  return true;
}

TEST(Config, Validation) {
  Config c;
  EXPECT_NO_THROW(c.validate());
  c.t_target = 0;
  EXPECT_THROW(c.validate(), InputError);
  c = Config{};
  c.dense_factor = -1;
  EXPECT_THROW(c.validate(), InputError);
  c = Config{};
  c.pieces_per_axis = 0;
  EXPECT_THROW(c.validate(), InputError);
}

TEST(DeriveArea, OnePercentMargin) {
  const std::vector<Point> pts{{0, 0}, {1, 1}};
  const Rect r = derive_area(pts).bounds();
  EXPECT_NEAR(r.min.x, -0.01, 1e-15);
  EXPECT_NEAR(r.min.y, -0.01, 1e-15);
  EXPECT_NEAR(r.max.x, 1.01, 1e-15);
  EXPECT_NEAR(r.max.y, 1.01, 1e-15);
  const std::vector<Point> line{{2, 5}, {4, 5}};
  const Rect l = derive_area(line).bounds();
  EXPECT_GT(l.height(), 0);
  EXPECT_THROW(derive_area({}), InputError);
}

TEST(CheckPoints, NamesIndexOfPointInsideObstacle) {
  const std::vector<Polygon> sq{Polygon(oracle::box(0, 0, 1, 1))};
  const std::vector<Point> pts{{2, 2}, {1, 0.5}, {0.5, 0.5}};
  try {
    check_points_outside_obstacles(pts, sq);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.index(), std::optional<std::size_t>(2));
  }
}

TEST(RunCpo, TenUniformPointsFormOneCluster) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Point> pts(10);
  for (Point& p : pts) p = {u(rng), u(rng)};
  const ClusteringResult r = run_cpo(pts, {}, Config{});
  EXPECT_EQ(r.grid.divisions, 1u);
  EXPECT_DOUBLE_EQ(r.grid.threshold, 10.0);
  ASSERT_EQ(r.clusters.size(), 1u);
  EXPECT_EQ(r.clusters[0].n_points, 10u);
  EXPECT_TRUE(r.noise.empty());
}

TEST(RunCpo, TwoBlobsMatchPlainReference) {
  std::mt19937_64 rng(5);
  std::vector<Point> pts = oracle::gaussian_blob(rng, {0.25, 0.3}, 0.04, 500);
  const auto b = oracle::gaussian_blob(rng, {0.75, 0.7}, 0.04, 500);
  pts.insert(pts.end(), b.begin(), b.end());
  Config cfg;
  cfg.t_target = 10;
  const SpatialArea area = derive_area(pts);
  const ClusteringResult r = run_cpo(pts, {}, cfg, area);
  ASSERT_EQ(r.clusters.size(), 2u);
  EXPECT_NEAR(r.clusters[0].center.x, 0.25, 0.02);
  EXPECT_NEAR(r.clusters[1].center.x, 0.75, 0.02);

  const Grid grid = build_grid(pts, area, r.grid.divisions, cfg.dense_factor);
  const auto ref = oracle::plain_grid_clusters(pts, grid);
  ASSERT_EQ(ref.size(), r.clusters.size());
  for (std::size_t k = 0; k < ref.size(); ++k) {
    std::vector<std::size_t> cells;
    for (const UnitId& id : r.clusters[k].units) cells.push_back(id.cell);
    EXPECT_EQ(cells, ref[k].cells);
    EXPECT_EQ(r.clusters[k].points, ref[k].points);
    EXPECT_EQ(r.clusters[k].center, ref[k].center);
  }
}

TEST(RunCpo, PartitionAndDeterminism) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rings = oracle::random_convex_scene(rng, 3);
    std::vector<Point> pts;
    for (int b = 0; b < 3; ++b) {
      const Point c = oracle::random_free_point(rng, rings, 0.05);
      for (Point p : oracle::gaussian_blob(rng, c, 0.08, 200)) {
        p = {std::clamp(p.x, 0.0, 1.0), std::clamp(p.y, 0.0, 1.0)};
        bool free = true;
        for (const auto& ring : rings) free &= oracle::winding_number(p, ring) == 0;
        if (free) pts.push_back(p);
      }
    }
    const auto obstacles = oracle::to_polygons(rings);
    Config cfg;
    cfg.t_target = 15;
    const ClusteringResult a = run_cpo(pts, obstacles, cfg);
    const ClusteringResult b = run_cpo(pts, obstacles, cfg);
    EXPECT_TRUE(is_partition(a, pts.size()));
    EXPECT_EQ(format_result(a), format_result(b));
    for (const Cluster& c : a.clusters) {
      EXPECT_FALSE(point_strictly_inside_any(c.center, obstacles));
      EXPECT_EQ(c.n_points, c.points.size());
    }
  }
}

TEST(RunCpo, RiverSplitsBanks) {
  std::mt19937_64 rng(13);
  const oracle::Ring river = oracle::box(0.48, -0.5, 0.52, 1.5);
  std::vector<Point> pts;
  for (Point c : {Point{0.42, 0.5}, Point{0.58, 0.5}}) {
    std::size_t kept = 0;
    std::normal_distribution<double> n(0, 0.05);
    while (kept < 500) {
      const Point p{c.x + n(rng), c.y + n(rng)};
      if (oracle::winding_number(p, river) != 0) continue;
      pts.push_back(p);
      ++kept;
    }
  }
  Config cfg;
  cfg.t_target = 20;
  const std::vector<Polygon> obstacles{Polygon(river)};
  const ClusteringResult r = run_cpo(pts, obstacles, cfg);
  ASSERT_GE(r.clusters.size(), 2u);
  for (const Cluster& c : r.clusters) {
    bool west = false;
    bool east = false;
    for (std::size_t i : c.points) (pts[i].x < 0.5 ? west : east) = true;
    EXPECT_FALSE(west && east);
  }
  const ClusteringResult merged = run_cpo(pts, {}, cfg);
  ASSERT_GE(merged.clusters.size(), 1u);
  bool both = false;
  for (const Cluster& c : merged.clusters) {
    bool west = false;
    bool east = false;
    for (std::size_t i : c.points) (pts[i].x < 0.5 ? west : east) = true;
    both |= west && east;
  }
  EXPECT_TRUE(both);
}

TEST(RunCpo, RejectsPointInsideObstacle) {
  const std::vector<Point> pts{{0.1, 0.1}, {0.5, 0.5}, {0.9, 0.9}};
  const std::vector<Polygon> obstacles{Polygon(oracle::box(0.4, 0.4, 0.6, 0.6))};
  EXPECT_THROW(run_cpo(pts, obstacles, Config{}), InputError);
}

TEST(RunCpo, EmptyClusterListPutsAllPointsInNoise) {
  // Opposite corners of a 2x2 grid: each occupied cell is dense (1 >= 0.5)
  // but its small area averages 1/3.
  const std::vector<Point> pts{{0, 0}, {1, 1}};
  Config cfg;
  cfg.t_target = 0.5;
  const ClusteringResult r = run_cpo(pts, {}, cfg);
  EXPECT_EQ(r.grid.divisions, 2u);
  EXPECT_TRUE(r.clusters.empty());
  EXPECT_EQ(r.noise, (std::vector<std::size_t>{0, 1}));
}

}  // namespace
}  // namespace cpo
