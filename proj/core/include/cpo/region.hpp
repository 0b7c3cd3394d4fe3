#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cpo/geometry.hpp"
#include "cpo/grid.hpp"
#include "cpo/subcell.hpp"

namespace cpo {

/// Identifies a clustering unit: a whole non-obstructed cell (`sub == -1`)
/// or sub-cell `sub` of an obstructed cell. Ordered by (cell, sub).
struct UnitId {
  std::size_t cell = 0;
  std::int32_t sub = -1;

  bool whole() const { return sub < 0; }
  friend auto operator<=>(const UnitId&, const UnitId&) = default;
};

struct Unit {
  UnitId id;
  std::size_t count = 0;
  double sum_x = 0.0;
  double sum_y = 0.0;
  double weight = 1.0;  // area fraction of the parent cell
  bool dense = false;

  std::optional<Point> mean() const {
    if (count == 0) return std::nullopt;
    return Point{sum_x / static_cast<double>(count), sum_y / static_cast<double>(count)};
  }
};

using Adjacency = std::vector<std::vector<std::size_t>>;

/// Units in ascending id order plus their symmetric, sorted neighbour lists.
class UnitGraph {
 public:
  UnitGraph(std::vector<Unit> units, Adjacency adjacency, std::vector<std::size_t> cell_offset);

  std::size_t size() const { return units_.size(); }
  std::span<const Unit> units() const { return units_; }
  const Unit& unit(std::size_t i) const { return units_[i]; }
  const Adjacency& adjacency() const { return adjacency_; }
  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_[i]; }

  std::optional<std::size_t> find(UnitId id) const;

 private:
  std::vector<Unit> units_;
  Adjacency adjacency_;
  std::vector<std::size_t> cell_offset_;
};

/// Whole non-obstructed cells and every sub-cell, in ascending id order.
std::vector<Unit> collect_units(const Grid& grid, const Subdivision& subdivision);

/// Footprints share an edge of positive length. Sub-cells are compared
/// piece by piece across the parent-cell border.
bool unit_adjacency(const Unit& u, const Unit& v, const Grid& grid,
                    const Subdivision& subdivision);

UnitGraph build_unit_graph(const Grid& grid, const Subdivision& subdivision);

struct Region {
  std::vector<std::size_t> units;    // indices into the unit table, ascending
  std::size_t n_points = 0;
  std::vector<std::size_t> members;  // point indices, ascending (assign_points)
};

/// Breadth-first region growing. A unit's "small area" is itself plus all
/// its neighbours; it is accepted when sum(n) / sum(weight) >= t, and then
/// its not-yet-claimed dense neighbours join the region and are queued.
/// Seeds are tried in ascending unit order; a seed whose own small area is
/// rejected stays unclaimed. Regions come back ordered by smallest unit.
std::vector<Region> grow_regions(std::span<const Unit> units, const Adjacency& adjacency,
                                 double t);

inline constexpr std::int64_t kNoise = -1;

/// Per-point region label (kNoise when the point's unit is in no region or
/// the point sits in an obstructed piece). Also fills `Region::members`.
std::vector<std::int64_t> assign_points(std::span<Region> regions, const UnitGraph& graph,
                                        const Grid& grid, const Subdivision& subdivision,
                                        std::span<const Point> points);

}  // namespace cpo
