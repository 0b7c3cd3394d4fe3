#include "cpo/center.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "cpo/error.hpp"

namespace cpo {

std::string_view to_string(CenterKind kind) {
  switch (kind) {
    case CenterKind::PlainMean: return "plain-mean";
    case CenterKind::CostMinimizingUnitMean: return "cost-minimizing-cell-mean";
  }
  return "unknown";
}

Point cluster_mean(std::span<const Point> points, std::span<const std::size_t> members) {
  if (members.empty()) throw InputError("cannot take the mean of an empty region");
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t i : members) {
    sx += points[i].x;
    sy += points[i].y;
  }
  const auto n = static_cast<double>(members.size());
  return {sx / n, sy / n};
}

namespace {

// Unit means with their node visibility, computed once per region.
struct RegionMeans {
  std::vector<Point> means;
  std::vector<std::vector<bool>> visibility;
};

RegionMeans prepare(const Region& region, std::span<const Unit> units,
                    std::span<const Polygon> obstacles, const VisibilityGraph& graph) {
  RegionMeans out;
  for (std::size_t u : region.units) {
    const auto m = units[u].mean();
    if (!m) throw InputError("region unit " + std::to_string(u) + " has no points", u);
    if (point_strictly_inside_any(*m, obstacles)) {
      throw InputError("mean of unit " + std::to_string(u) + " lies inside an obstacle", u);
    }
    out.means.push_back(*m);
    out.visibility.push_back(visible_nodes(*m, obstacles, graph));
  }
  return out;
}

double cost_at(std::size_t k, const RegionMeans& rm, std::span<const Polygon> obstacles,
               const VisibilityGraph& graph) {
  const ShortestPathTree tree(rm.means[k], obstacles, graph, rm.visibility[k]);
  double cost = 0.0;
  for (std::size_t i = 0; i < rm.means.size(); ++i) {
    if (i == k) continue;
    const auto d = tree.distance_to(rm.means[i], rm.visibility[i]);
    if (!d) return std::numeric_limits<double>::infinity();
    cost += *d * *d;
  }
  return cost;
}

}  // namespace

double unit_cost(std::size_t candidate, const Region& region, std::span<const Unit> units,
                 std::span<const Polygon> obstacles, const VisibilityGraph& graph) {
  const auto it = std::ranges::find(region.units, candidate);
  if (it == region.units.end()) throw InputError("candidate unit is not in the region", candidate);
  const RegionMeans rm = prepare(region, units, obstacles, graph);
  return cost_at(static_cast<std::size_t>(it - region.units.begin()), rm, obstacles, graph);
}

constexpr double kCostTieTolerance = 1e-12;

CenterResult find_center(const Region& region, std::span<const Unit> units,
                         std::span<const Point> points, std::span<const Polygon> obstacles,
                         const VisibilityGraph& graph) {
  if (region.units.empty()) throw InputError("region has no units");
  Point mean;
  if (!region.members.empty()) {
    mean = cluster_mean(points, region.members);
  } else {
    double sx = 0.0;
    double sy = 0.0;
    std::size_t n = 0;
    for (std::size_t u : region.units) {
      sx += units[u].sum_x;
      sy += units[u].sum_y;
      n += units[u].count;
    }
    if (n == 0) throw InputError("cannot take the mean of an empty region");
    mean = {sx / static_cast<double>(n), sy / static_cast<double>(n)};
  }
  if (!point_in_any(mean, obstacles)) return {mean, CenterKind::PlainMean, std::nullopt, std::nullopt};

  const RegionMeans rm = prepare(region, units, obstacles, graph);
  std::size_t best = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < rm.means.size(); ++k) {
    const double c = cost_at(k, rm, obstacles, graph);
    // region.units is ascending, so a strict improvement keeps the smallest
    // id on ties. Costs of mirror-image units can differ by rounding only.
    if (k == 0 || c < best_cost - kCostTieTolerance * std::max(1.0, best_cost)) {
      best = k;
      best_cost = c;
    }
  }
  return {rm.means[best], CenterKind::CostMinimizingUnitMean, best_cost, region.units[best]};
}

}  // namespace cpo
