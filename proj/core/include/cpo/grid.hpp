#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cpo/geometry.hpp"

namespace cpo {

/// The rectangle being clustered. Width and height must be positive.
class SpatialArea {
 public:
  explicit SpatialArea(Rect bounds);

  const Rect& bounds() const { return bounds_; }
  double width() const { return bounds_.width(); }
  double height() const { return bounds_.height(); }

 private:
  Rect bounds_;
};

/// Coordinate of the k-th of `divisions` equal slots' lower edge on
/// [lo, hi]. Shared edges evaluate identically from both neighbours and
/// `axis_edge(lo, hi, n, n) == hi` exactly.
double axis_edge(double lo, double hi, std::size_t divisions, std::size_t k);

/// Slot of `v` on [lo, hi] split into `divisions` equal parts. A value on a
/// shared edge goes to the lower slot; values outside are clamped.
std::size_t axis_slot(double v, double lo, double hi, std::size_t divisions);

struct CellIndex {
  std::size_t row = 0;  // along y
  std::size_t col = 0;  // along x

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

struct Cell {
  CellIndex index;
  Rect rect;
  std::size_t count = 0;
  double sum_x = 0.0;
  double sum_y = 0.0;
  bool dense = false;
  bool obstructed = false;

  std::optional<Point> mean() const {
    if (count == 0) return std::nullopt;
    return Point{sum_x / static_cast<double>(count), sum_y / static_cast<double>(count)};
  }
};

/// Uniform g x g partition of a spatial area. Cell ids are row-major,
/// `id = row * g + col`, with row 0 at the minimum y.
class Grid {
 public:
  Grid(SpatialArea area, std::size_t divisions);

  const SpatialArea& area() const { return area_; }
  std::size_t divisions() const { return divisions_; }
  std::size_t cell_count() const { return cells_.size(); }

  /// Dense threshold t (average points per cell times the dense factor).
  double threshold() const { return threshold_; }
  void set_threshold(double t) { threshold_ = t; }

  std::size_t id(CellIndex i) const { return i.row * divisions_ + i.col; }
  CellIndex index(std::size_t id) const { return {id / divisions_, id % divisions_}; }

  Cell& cell(std::size_t id) { return cells_[id]; }
  const Cell& cell(std::size_t id) const { return cells_[id]; }
  const Cell& cell(CellIndex i) const { return cells_[id(i)]; }
  std::span<Cell> cells() { return cells_; }
  std::span<const Cell> cells() const { return cells_; }

  /// Cell id owning `p`; boundary ties go to the lower (row, col).
  std::size_t locate(Point p) const;

  /// Cell id of every input point, by point index (filled by build_grid).
  std::span<const std::size_t> point_cells() const { return point_cells_; }
  std::size_t point_count() const { return point_cells_.size(); }

  std::size_t obstructed_count() const;
  std::size_t dense_count() const;

 private:
  friend Grid build_grid(std::span<const Point>, const SpatialArea&, std::size_t, double);

  SpatialArea area_;
  std::size_t divisions_;
  double threshold_ = 0.0;
  std::vector<Cell> cells_;
  std::vector<std::size_t> point_cells_;
};

/// Divisions per axis so the average cell holds at most about `t_target`
/// points: max(1, ceil(sqrt(n / t_target))).
std::size_t choose_grid_resolution(std::size_t n, double t_target);

/// Single pass over `points` filling per-cell count and coordinate sums.
/// The threshold becomes `dense_factor * N / g^2`. Throws InputError naming
/// the first point outside the area.
Grid build_grid(std::span<const Point> points, const SpatialArea& area, std::size_t divisions,
                double dense_factor = 1.0);

/// dense(c) <=> n_c >= t (and n_c > 0, so an empty cell is never dense).
void label_dense_cells(Grid& grid);

/// obstructed(c) <=> the closed cell rectangle touches some obstacle.
void label_obstructed_cells(Grid& grid, std::span<const Polygon> obstacles);

}  // namespace cpo
