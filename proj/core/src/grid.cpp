#include "cpo/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpo/error.hpp"

namespace cpo {

SpatialArea::SpatialArea(Rect bounds) : bounds_(bounds) {
  if (!is_finite(bounds.min) || !is_finite(bounds.max) || !(bounds.width() > 0) ||
      !(bounds.height() > 0)) {
    throw InputError("spatial area must have positive, finite width and height");
  }
}

double axis_edge(double lo, double hi, std::size_t divisions, std::size_t k) {
  if (k == 0) return lo;
  if (k >= divisions) return hi;
  return lo + (hi - lo) * (static_cast<double>(k) / static_cast<double>(divisions));
}

std::size_t axis_slot(double v, double lo, double hi, std::size_t divisions) {
  const double f = (v - lo) / (hi - lo) * static_cast<double>(divisions);
  std::size_t k = 0;
  if (f > 0) {
    k = std::min(static_cast<std::size_t>(f), divisions - 1);
  }
  while (k > 0 && v <= axis_edge(lo, hi, divisions, k)) --k;
  while (k + 1 < divisions && v > axis_edge(lo, hi, divisions, k + 1)) ++k;
  return k;
}

Grid::Grid(SpatialArea area, std::size_t divisions) : area_(area), divisions_(divisions) {
  if (divisions == 0) throw InputError("grid needs at least one division per axis");
  const Rect& b = area_.bounds();
  cells_.resize(divisions * divisions);
  for (std::size_t row = 0; row < divisions; ++row) {
    for (std::size_t col = 0; col < divisions; ++col) {
      Cell& c = cells_[row * divisions + col];
      c.index = {row, col};
      c.rect = {{axis_edge(b.min.x, b.max.x, divisions, col),
                 axis_edge(b.min.y, b.max.y, divisions, row)},
                {axis_edge(b.min.x, b.max.x, divisions, col + 1),
                 axis_edge(b.min.y, b.max.y, divisions, row + 1)}};
    }
  }
}

std::size_t Grid::locate(Point p) const {
  const Rect& b = area_.bounds();
  const std::size_t col = axis_slot(p.x, b.min.x, b.max.x, divisions_);
  const std::size_t row = axis_slot(p.y, b.min.y, b.max.y, divisions_);
  return row * divisions_ + col;
}

std::size_t Grid::obstructed_count() const {
  return static_cast<std::size_t>(
      std::ranges::count_if(cells_, [](const Cell& c) { return c.obstructed; }));
}

std::size_t Grid::dense_count() const {
  return static_cast<std::size_t>(
      std::ranges::count_if(cells_, [](const Cell& c) { return c.dense; }));
}

std::size_t choose_grid_resolution(std::size_t n, double t_target) {
  if (!(t_target > 0)) throw InputError("t_target must be positive");
  const double ratio = static_cast<double>(n) / t_target;
  auto g = static_cast<std::size_t>(std::ceil(std::sqrt(ratio)));
  // Guard against sqrt rounding up past an exact square.
  while (g > 1 && static_cast<double>((g - 1) * (g - 1)) >= ratio) --g;
  return std::max<std::size_t>(g, 1);
}

Grid build_grid(std::span<const Point> points, const SpatialArea& area, std::size_t divisions,
                double dense_factor) {
  if (!(dense_factor > 0)) throw InputError("dense_factor must be positive");
  Grid grid(area, divisions);
  grid.point_cells_.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (!is_finite(p) || !area.bounds().contains(p)) {
      throw InputError("point " + std::to_string(i) + " lies outside the spatial area", i);
    }
    const std::size_t id = grid.locate(p);
    Cell& c = grid.cells_[id];
    ++c.count;
    c.sum_x += p.x;
    c.sum_y += p.y;
    grid.point_cells_.push_back(id);
  }
  const double cells = static_cast<double>(grid.cell_count());
  grid.threshold_ = dense_factor * static_cast<double>(points.size()) / cells;
  return grid;
}

void label_dense_cells(Grid& grid) {
  const double t = grid.threshold();
  for (Cell& c : grid.cells()) {
    c.dense = c.count > 0 && static_cast<double>(c.count) >= t;
  }
}

void label_obstructed_cells(Grid& grid, std::span<const Polygon> obstacles) {
  for (Cell& c : grid.cells()) {
    c.obstructed = std::ranges::any_of(
        obstacles, [&](const Polygon& o) { return rect_intersects_polygon(c.rect, o); });
  }
}

}  // namespace cpo
