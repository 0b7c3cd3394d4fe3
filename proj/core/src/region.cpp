#include "cpo/region.hpp"

#include <algorithm>
#include <deque>

#include "cpo/error.hpp"

namespace cpo {

namespace {

enum class Side { West, East, South, North };

constexpr Side opposite(Side s) {
  switch (s) {
    case Side::West: return Side::East;
    case Side::East: return Side::West;
    case Side::South: return Side::North;
    case Side::North: return Side::South;
  }
  return s;
}

// k-th piece, counted along the edge, on side `s` of a piece grid.
std::size_t border_piece(Side s, std::size_t k, std::size_t n) {
  switch (s) {
    case Side::West: return k * n;
    case Side::East: return k * n + (n - 1);
    case Side::South: return k;
    case Side::North: return (n - 1) * n + k;
  }
  return 0;
}

// Side of `from` that faces `to`, if the two cells share an edge.
std::optional<Side> facing_side(CellIndex from, CellIndex to) {
  if (from.row == to.row) {
    if (to.col + 1 == from.col) return Side::West;
    if (from.col + 1 == to.col) return Side::East;
  } else if (from.col == to.col) {
    if (to.row + 1 == from.row) return Side::South;
    if (from.row + 1 == to.row) return Side::North;
  }
  return std::nullopt;
}

std::optional<std::size_t> neighbor_cell(const Grid& grid, std::size_t id, Side s) {
  const CellIndex i = grid.index(id);
  const std::size_t g = grid.divisions();
  switch (s) {
    case Side::West: if (i.col == 0) return std::nullopt; return id - 1;
    case Side::East: if (i.col + 1 == g) return std::nullopt; return id + 1;
    case Side::South: if (i.row == 0) return std::nullopt; return id - g;
    case Side::North: if (i.row + 1 == g) return std::nullopt; return id + g;
  }
  return std::nullopt;
}

constexpr Side kSides[] = {Side::West, Side::East, Side::South, Side::North};

}  // namespace

UnitGraph::UnitGraph(std::vector<Unit> units, Adjacency adjacency,
                     std::vector<std::size_t> cell_offset)
    : units_(std::move(units)), adjacency_(std::move(adjacency)),
      cell_offset_(std::move(cell_offset)) {}

std::optional<std::size_t> UnitGraph::find(UnitId id) const {
  if (id.cell + 1 >= cell_offset_.size()) return std::nullopt;
  const std::size_t i = cell_offset_[id.cell] + (id.whole() ? 0 : static_cast<std::size_t>(id.sub));
  if (i >= cell_offset_[id.cell + 1] || units_[i].id != id) return std::nullopt;
  return i;
}

std::vector<Unit> collect_units(const Grid& grid, const Subdivision& subdivision) {
  std::vector<Unit> units;
  for (std::size_t id = 0; id < grid.cell_count(); ++id) {
    const Cell& c = grid.cell(id);
    if (!c.obstructed) {
      units.push_back({{id, -1}, c.count, c.sum_x, c.sum_y, 1.0, c.dense});
      continue;
    }
    const CellDecomposition* d = subdivision.find(id);
    if (d == nullptr) continue;
    const auto subs = d->subcells();
    for (std::size_t s = 0; s < subs.size(); ++s) {
      const SubCell& sc = subs[s];
      units.push_back({{id, static_cast<std::int32_t>(s)}, sc.count, sc.sum_x, sc.sum_y,
                       sc.area_fraction, sc.dense});
    }
  }
  return units;
}

namespace {

bool border_owned(const CellDecomposition& d, Side s, std::size_t k, std::int32_t sub) {
  const auto o = d.owner(border_piece(s, k, d.pieces_per_axis()));
  return o && static_cast<std::int32_t>(*o) == sub;
}

}  // namespace

bool unit_adjacency(const Unit& u, const Unit& v, const Grid& grid,
                    const Subdivision& subdivision) {
  if (u.id.cell == v.id.cell) return false;
  const auto side = facing_side(grid.index(u.id.cell), grid.index(v.id.cell));
  if (!side) return false;
  if (u.id.whole() && v.id.whole()) return true;

  const std::size_t n = subdivision.pieces_per_axis();
  const CellDecomposition* du = u.id.whole() ? nullptr : subdivision.find(u.id.cell);
  const CellDecomposition* dv = v.id.whole() ? nullptr : subdivision.find(v.id.cell);
  if ((!u.id.whole() && du == nullptr) || (!v.id.whole() && dv == nullptr)) return false;

  for (std::size_t k = 0; k < n; ++k) {
    const bool u_side = u.id.whole() || border_owned(*du, *side, k, u.id.sub);
    const bool v_side = v.id.whole() || border_owned(*dv, opposite(*side), k, v.id.sub);
    if (u_side && v_side) return true;
  }
  return false;
}

UnitGraph build_unit_graph(const Grid& grid, const Subdivision& subdivision) {
  std::vector<Unit> units = collect_units(grid, subdivision);

  std::vector<std::size_t> offset(grid.cell_count() + 1, 0);
  for (const Unit& u : units) ++offset[u.id.cell + 1];
  for (std::size_t i = 0; i < grid.cell_count(); ++i) offset[i + 1] += offset[i];
  auto index_of = [&](std::size_t cell, std::int32_t sub) {
    return offset[cell] + (sub < 0 ? 0 : static_cast<std::size_t>(sub));
  };

  const std::size_t n = subdivision.pieces_per_axis();
  Adjacency adj(units.size());
  for (std::size_t ui = 0; ui < units.size(); ++ui) {
    const UnitId id = units[ui].id;
    const CellDecomposition* own = id.whole() ? nullptr : subdivision.find(id.cell);
    for (Side s : kSides) {
      const auto nb = neighbor_cell(grid, id.cell, s);
      if (!nb) continue;
      const Cell& other = grid.cell(*nb);
      if (!other.obstructed) {
        if (id.whole()) {
          adj[ui].push_back(index_of(*nb, -1));
        } else {
          for (std::size_t k = 0; k < n; ++k) {
            if (border_owned(*own, s, k, id.sub)) {
              adj[ui].push_back(index_of(*nb, -1));
              break;
            }
          }
        }
        continue;
      }
      const CellDecomposition* od = subdivision.find(*nb);
      if (od == nullptr) continue;
      const std::size_t m = od->pieces_per_axis();
      for (std::size_t k = 0; k < m; ++k) {
        if (!id.whole() && !border_owned(*own, s, k, id.sub)) continue;
        if (const auto o = od->owner(border_piece(opposite(s), k, m))) {
          adj[ui].push_back(index_of(*nb, static_cast<std::int32_t>(*o)));
        }
      }
    }
    std::ranges::sort(adj[ui]);
    const auto dup = std::ranges::unique(adj[ui]);
    adj[ui].erase(dup.begin(), dup.end());
  }
  return UnitGraph(std::move(units), std::move(adj), std::move(offset));
}

std::vector<Region> grow_regions(std::span<const Unit> units, const Adjacency& adjacency,
                                 double t) {
  if (adjacency.size() != units.size()) {
    throw InputError("adjacency must have one list per unit");
  }
  std::vector<bool> claimed(units.size(), false);

  auto accepts = [&](std::size_t x) {
    double n = static_cast<double>(units[x].count);
    double w = units[x].weight;
    for (std::size_t y : adjacency[x]) {
      n += static_cast<double>(units[y].count);
      w += units[y].weight;
    }
    return n >= t * w;
  };

  std::vector<Region> regions;
  std::deque<std::size_t> queue;
  for (std::size_t seed = 0; seed < units.size(); ++seed) {
    if (!units[seed].dense || claimed[seed] || !accepts(seed)) continue;
    Region region;
    claimed[seed] = true;
    region.units.push_back(seed);
    queue.push_back(seed);
    bool first = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      if (!first && !accepts(x)) continue;
      first = false;
      for (std::size_t y : adjacency[x]) {
        if (units[y].dense && !claimed[y]) {
          claimed[y] = true;
          region.units.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::ranges::sort(region.units);
    for (std::size_t u : region.units) region.n_points += units[u].count;
    regions.push_back(std::move(region));
  }
  std::ranges::sort(regions, {}, [](const Region& r) { return r.units.front(); });
  return regions;
}

std::vector<std::int64_t> assign_points(std::span<Region> regions, const UnitGraph& graph,
                                        const Grid& grid, const Subdivision& subdivision,
                                        std::span<const Point> points) {
  std::vector<std::int64_t> unit_label(graph.size(), kNoise);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    regions[r].members.clear();
    for (std::size_t u : regions[r].units) unit_label[u] = static_cast<std::int64_t>(r);
  }

  const auto cells_of = grid.point_cells();
  if (cells_of.size() != points.size()) {
    throw InputError("points do not match the grid they were counted into");
  }
  std::vector<std::int64_t> labels(points.size(), kNoise);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t cell = cells_of[i];
    std::optional<std::size_t> unit;
    if (!grid.cell(cell).obstructed) {
      unit = graph.find({cell, -1});
    } else if (const CellDecomposition* d = subdivision.find(cell)) {
      if (const auto s = d->subcell_of(points[i])) {
        unit = graph.find({cell, static_cast<std::int32_t>(*s)});
      }
    }
    if (!unit) continue;
    const std::int64_t label = unit_label[*unit];
    labels[i] = label;
    if (label != kNoise) regions[static_cast<std::size_t>(label)].members.push_back(i);
  }
  return labels;
}

}  // namespace cpo
