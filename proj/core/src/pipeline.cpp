#include "cpo/pipeline.hpp"

#include <string>

#include "cpo/error.hpp"
#include "cpo/obsdist.hpp"
#include "cpo/subcell.hpp"

namespace cpo {

void Config::validate() const {
  if (!(t_target > 0)) throw InputError("t_target must be positive");
  if (!(dense_factor > 0)) throw InputError("dense_factor must be positive");
  if (pieces_per_axis && *pieces_per_axis == 0) {
    throw InputError("pieces_per_axis must be at least 1");
  }
}

SpatialArea derive_area(std::span<const Point> points) {
  if (points.empty()) throw InputError("cannot derive a spatial area from zero points");
  Rect box = bounding_rect(points);
  auto widen = [](double& lo, double& hi) {
    const double extent = hi - lo;
    const double margin = extent > 0 ? 0.01 * extent : 0.5;
    lo -= margin;
    hi += margin;
  };
  widen(box.min.x, box.max.x);
  widen(box.min.y, box.max.y);
  return SpatialArea(box);
}

void check_points_outside_obstacles(std::span<const Point> points,
                                    std::span<const Polygon> obstacles) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t o = 0; o < obstacles.size(); ++o) {
      if (point_strictly_inside(points[i], obstacles[o])) {
        throw InputError("point " + std::to_string(i) + " lies strictly inside obstacle " +
                             std::to_string(o),
                         i);
      }
    }
  }
}

ClusteringResult run_cpo(std::span<const Point> points, std::span<const Polygon> obstacles,
                         const Config& config, std::optional<SpatialArea> area) {
  config.validate();
  check_points_outside_obstacles(points, obstacles);
  const SpatialArea s = area ? *area : derive_area(points);

  // Steps 1-5: resolution, counts and means, dense and obstructed labels.
  const std::size_t g = choose_grid_resolution(points.size(), config.t_target);
  Grid grid = build_grid(points, s, g, config.dense_factor);
  label_dense_cells(grid);
  label_obstructed_cells(grid, obstacles);

  // Steps 6-7: sub-cells of every obstructed cell.
  const std::size_t pieces = config.pieces_per_axis
                                 ? *config.pieces_per_axis
                                 : default_pieces_per_axis(grid.threshold(), config.t_target);
  const Subdivision subdivision = subdivide_obstructed_cells(grid, points, obstacles, pieces);

  // Step 8: regions.
  const UnitGraph graph = build_unit_graph(grid, subdivision);
  std::vector<Region> regions = grow_regions(graph.units(), graph.adjacency(), grid.threshold());
  const std::vector<std::int64_t> labels =
      assign_points(regions, graph, grid, subdivision, points);

  // Step 9: centers.
  const VisibilityGraph vg = build_visibility_graph(obstacles);

  ClusteringResult result;
  result.grid = {g, grid.threshold(), grid.cell_count(), grid.obstructed_count(), pieces,
                 s.bounds()};
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const Region& region = regions[r];
    const CenterResult c = find_center(region, graph.units(), points, obstacles, vg);
    Cluster cl;
    cl.id = r;
    cl.center = c.center;
    cl.kind = c.kind;
    cl.cost = c.cost;
    for (std::size_t u : region.units) cl.units.push_back(graph.unit(u).id);
    cl.points = region.members;
    cl.n_points = region.members.size();
    result.clusters.push_back(std::move(cl));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == kNoise) result.noise.push_back(i);
  }
  return result;
}

}  // namespace cpo
