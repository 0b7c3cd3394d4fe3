#include "cpo/subcell.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "cpo/error.hpp"

namespace cpo {

CellDecomposition::CellDecomposition(std::size_t cell_id, Rect rect, std::size_t pieces_per_axis)
    : cell_id_(cell_id),
      rect_(rect),
      pieces_per_axis_(pieces_per_axis),
      obstructed_(pieces_per_axis * pieces_per_axis, 0),
      owner_(pieces_per_axis * pieces_per_axis, -1) {
  if (pieces_per_axis == 0) throw InputError("pieces_per_axis must be at least 1");
}

Rect CellDecomposition::piece_rect(std::size_t piece) const {
  const std::size_t row = piece / pieces_per_axis_;
  const std::size_t col = piece % pieces_per_axis_;
  const std::size_t n = pieces_per_axis_;
  return {{axis_edge(rect_.min.x, rect_.max.x, n, col), axis_edge(rect_.min.y, rect_.max.y, n, row)},
          {axis_edge(rect_.min.x, rect_.max.x, n, col + 1),
           axis_edge(rect_.min.y, rect_.max.y, n, row + 1)}};
}

std::optional<std::size_t> CellDecomposition::owner(std::size_t piece) const {
  const std::int32_t o = owner_[piece];
  if (o < 0) return std::nullopt;
  return static_cast<std::size_t>(o);
}

std::size_t CellDecomposition::locate_piece(Point p) const {
  const std::size_t n = pieces_per_axis_;
  return piece_id(axis_slot(p.y, rect_.min.y, rect_.max.y, n),
                  axis_slot(p.x, rect_.min.x, rect_.max.x, n));
}

std::optional<std::size_t> CellDecomposition::subcell_of(Point p) const {
  return owner(locate_piece(p));
}

CellDecomposition decompose_cell(const Cell& cell, std::size_t cell_id,
                                 std::span<const Point> points_in_cell,
                                 std::span<const Polygon> obstacles,
                                 std::size_t pieces_per_axis) {
  CellDecomposition d(cell_id, cell.rect, pieces_per_axis);
  const std::size_t n = pieces_per_axis;
  const std::size_t total = n * n;

  for (std::size_t piece = 0; piece < total; ++piece) {
    const Rect r = d.piece_rect(piece);
    d.obstructed_[piece] = std::ranges::any_of(obstacles, [&](const Polygon& o) {
      return rect_intersects_polygon(r, o);
    });
  }

  // Row-major scan seeds each component at its smallest piece id, which
  // fixes the sub-cell order.
  std::deque<std::size_t> queue;
  for (std::size_t seed = 0; seed < total; ++seed) {
    if (d.obstructed_[seed] || d.owner_[seed] >= 0) continue;
    const auto ordinal = static_cast<std::int32_t>(d.subcells_.size());
    SubCell& sc = d.subcells_.emplace_back();
    sc.parent = cell_id;
    d.owner_[seed] = ordinal;
    queue.push_back(seed);
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop_front();
      sc.pieces.push_back(p);
      const std::size_t row = p / n;
      const std::size_t col = p % n;
      auto visit = [&](std::size_t q) {
        if (!d.obstructed_[q] && d.owner_[q] < 0) {
          d.owner_[q] = ordinal;
          queue.push_back(q);
        }
      };
      if (col > 0) visit(p - 1);
      if (col + 1 < n) visit(p + 1);
      if (row > 0) visit(p - n);
      if (row + 1 < n) visit(p + n);
    }
    std::ranges::sort(sc.pieces);
    sc.area_fraction = static_cast<double>(sc.pieces.size()) / static_cast<double>(total);
  }

  for (const Point& p : points_in_cell) {
    if (const auto s = d.subcell_of(p)) {
      SubCell& sc = d.subcells_[*s];
      ++sc.count;
      sc.sum_x += p.x;
      sc.sum_y += p.y;
    }
  }
  return d;
}

void label_dense_subcells(std::span<SubCell> subcells, double t) {
  for (SubCell& sc : subcells) {
    sc.dense = sc.count > 0 && static_cast<double>(sc.count) >= sc.area_fraction * t;
  }
}

std::size_t default_pieces_per_axis(double t, double t_target) {
  if (!(t_target > 0)) throw InputError("t_target must be positive");
  const double raw = std::ceil(std::sqrt(10.0 * std::max(t, 0.0) / t_target));
  return static_cast<std::size_t>(std::clamp(raw, 4.0, 64.0));
}

void Subdivision::add(CellDecomposition d) {
  if (cells_.empty()) {
    pieces_per_axis_ = d.pieces_per_axis();
  } else if (d.pieces_per_axis() != pieces_per_axis_) {
    throw InputError("all decompositions must share one pieces_per_axis");
  }
  const std::size_t id = d.cell_id();
  slot_[id] = static_cast<std::int32_t>(cells_.size());
  cells_.push_back(std::move(d));
}

Subdivision subdivide_obstructed_cells(const Grid& grid, std::span<const Point> points,
                                       std::span<const Polygon> obstacles,
                                       std::size_t pieces_per_axis) {
  // Bucket point coordinates by obstructed cell, preserving input order.
  std::vector<std::int32_t> bucket(grid.cell_count(), -1);
  std::vector<std::vector<Point>> members;
  for (std::size_t id = 0; id < grid.cell_count(); ++id) {
    if (grid.cell(id).obstructed) {
      bucket[id] = static_cast<std::int32_t>(members.size());
      members.emplace_back();
    }
  }
  const auto cells_of = grid.point_cells();
  for (std::size_t i = 0; i < cells_of.size(); ++i) {
    const std::int32_t b = bucket[cells_of[i]];
    if (b >= 0) members[static_cast<std::size_t>(b)].push_back(points[i]);
  }

  Subdivision out(grid.cell_count());
  for (std::size_t id = 0; id < grid.cell_count(); ++id) {
    const std::int32_t b = bucket[id];
    if (b < 0) continue;
    CellDecomposition d = decompose_cell(grid.cell(id), id, members[static_cast<std::size_t>(b)],
                                         obstacles, pieces_per_axis);
    label_dense_subcells(d.subcells(), grid.threshold());
    out.add(std::move(d));
  }
  return out;
}

}  // namespace cpo
