#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cpo/center.hpp"
#include "cpo/geometry.hpp"
#include "cpo/grid.hpp"
#include "cpo/region.hpp"

namespace cpo {

struct Config {
  double t_target = 100.0;      // desired average points per cell
  double dense_factor = 1.0;    // multiplies the average to get t
  std::optional<std::size_t> pieces_per_axis;  // auto when unset

  void validate() const;
};

struct Cluster {
  std::size_t id = 0;
  Point center;
  CenterKind kind = CenterKind::PlainMean;
  std::optional<double> cost;
  std::vector<UnitId> units;
  std::vector<std::size_t> points;
  std::size_t n_points = 0;
};

struct GridSummary {
  std::size_t divisions = 0;
  double threshold = 0.0;
  std::size_t cell_count = 0;
  std::size_t obstructed_cells = 0;
  std::size_t pieces_per_axis = 0;
  Rect area;
};

struct ClusteringResult {
  std::vector<Cluster> clusters;
  std::vector<std::size_t> noise;
  GridSummary grid;
};

/// Tight bounding box of the points grown by 1% of its extent on every
/// side. A zero extent on an axis is widened to 1 unit around the points.
SpatialArea derive_area(std::span<const Point> points);

/// Throws InputError naming the first point strictly inside an obstacle.
void check_points_outside_obstacles(std::span<const Point> points,
                                    std::span<const Polygon> obstacles);

/// The whole clustering pipeline: grid, dense and obstructed labels, sub-cell
/// decomposition, region growing, centers. Deterministic. When `area` is not
/// given it is derived from the points.
ClusteringResult run_cpo(std::span<const Point> points, std::span<const Polygon> obstacles,
                         const Config& config, std::optional<SpatialArea> area = std::nullopt);

}  // namespace cpo
