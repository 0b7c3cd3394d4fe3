#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpo/geometry.hpp"
#include "cpo/grid.hpp"

namespace cpo {

/// One connected, non-obstructed fragment of an obstructed cell.
struct SubCell {
  std::size_t parent = 0;            // cell id
  std::vector<std::size_t> pieces;   // row-major piece ids, ascending
  std::size_t count = 0;
  double sum_x = 0.0;
  double sum_y = 0.0;
  double area_fraction = 0.0;        // p_sc
  bool dense = false;

  std::optional<Point> mean() const {
    if (count == 0) return std::nullopt;
    return Point{sum_x / static_cast<double>(count), sum_y / static_cast<double>(count)};
  }
};

/// Piece grid of one obstructed cell and the sub-cells found on it.
class CellDecomposition {
 public:
  CellDecomposition(std::size_t cell_id, Rect rect, std::size_t pieces_per_axis);

  std::size_t cell_id() const { return cell_id_; }
  const Rect& rect() const { return rect_; }
  std::size_t pieces_per_axis() const { return pieces_per_axis_; }
  std::size_t piece_count() const { return owner_.size(); }

  std::size_t piece_id(std::size_t row, std::size_t col) const {
    return row * pieces_per_axis_ + col;
  }
  Rect piece_rect(std::size_t piece) const;
  bool piece_obstructed(std::size_t piece) const { return obstructed_[piece] != 0; }

  /// Sub-cell ordinal owning a piece; nullopt for obstructed pieces.
  std::optional<std::size_t> owner(std::size_t piece) const;

  /// Piece containing `p` (lower-index tie break, clamped to the cell).
  std::size_t locate_piece(Point p) const;

  /// Sub-cell ordinal whose pieces contain `p`, if any.
  std::optional<std::size_t> subcell_of(Point p) const;

  std::span<SubCell> subcells() { return subcells_; }
  std::span<const SubCell> subcells() const { return subcells_; }

 private:
  friend CellDecomposition decompose_cell(const Cell&, std::size_t, std::span<const Point>,
                                          std::span<const Polygon>, std::size_t);

  std::size_t cell_id_;
  Rect rect_;
  std::size_t pieces_per_axis_;
  std::vector<std::uint8_t> obstructed_;
  std::vector<std::int32_t> owner_;  // -1 when obstructed
  std::vector<SubCell> subcells_;
};

/// Splits an obstructed cell into a `pieces_per_axis`^2 piece grid, marks
/// every piece touching an obstacle, and flood-fills the rest into maximal
/// 4-connected sub-cells. Sub-cells are ordered by their smallest piece id.
/// Points in obstructed pieces belong to no sub-cell.
CellDecomposition decompose_cell(const Cell& cell, std::size_t cell_id,
                                 std::span<const Point> points_in_cell,
                                 std::span<const Polygon> obstacles,
                                 std::size_t pieces_per_axis);

/// dense(sc) <=> n_sc >= p_sc * t (and n_sc > 0).
void label_dense_subcells(std::span<SubCell> subcells, double t);

/// ceil(sqrt(10 * t / t_target)) clamped to [4, 64], i.e. about a tenth of
/// the target cell occupancy per piece.
std::size_t default_pieces_per_axis(double t, double t_target);

/// All obstructed-cell decompositions of a grid, addressable by cell id.
class Subdivision {
 public:
  explicit Subdivision(std::size_t cell_count) : slot_(cell_count, -1) {}

  void add(CellDecomposition d);

  const CellDecomposition* find(std::size_t cell_id) const {
    const std::int32_t s = slot_[cell_id];
    return s < 0 ? nullptr : &cells_[static_cast<std::size_t>(s)];
  }
  CellDecomposition* find(std::size_t cell_id) {
    const std::int32_t s = slot_[cell_id];
    return s < 0 ? nullptr : &cells_[static_cast<std::size_t>(s)];
  }

  std::span<const CellDecomposition> decompositions() const { return cells_; }
  std::span<CellDecomposition> decompositions() { return cells_; }
  std::size_t pieces_per_axis() const { return pieces_per_axis_; }

 private:
  std::vector<std::int32_t> slot_;
  std::vector<CellDecomposition> cells_;
  std::size_t pieces_per_axis_ = 0;
};

/// Decomposes every obstructed cell of `grid` (steps 6 and 7) and labels the
/// resulting sub-cells dense against `grid.threshold()`.
Subdivision subdivide_obstructed_cells(const Grid& grid, std::span<const Point> points,
                                       std::span<const Polygon> obstacles,
                                       std::size_t pieces_per_axis);

}  // namespace cpo
