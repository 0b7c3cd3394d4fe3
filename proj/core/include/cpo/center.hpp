#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "cpo/geometry.hpp"
#include "cpo/obsdist.hpp"
#include "cpo/region.hpp"

namespace cpo {

enum class CenterKind { PlainMean, CostMinimizingUnitMean };

std::string_view to_string(CenterKind kind);

struct CenterResult {
  Point center;
  CenterKind kind = CenterKind::PlainMean;
  std::optional<double> cost;       // set for CostMinimizingUnitMean
  std::optional<std::size_t> unit;  // winning unit index, same case
};

/// Arithmetic mean of `points[i]` over `members`, summed in the given order.
/// Throws InputError when `members` is empty.
Point cluster_mean(std::span<const Point> points, std::span<const std::size_t> members);

/// Sum over the region's units of the squared obstructed distance from the
/// candidate unit's mean to each unit mean (the candidate's own term is 0).
/// Unreachable units make the cost +inf. Throws InputError when a unit mean
/// is strictly inside an obstacle.
double unit_cost(std::size_t candidate, const Region& region, std::span<const Unit> units,
                 std::span<const Polygon> obstacles, const VisibilityGraph& graph);

/// The cluster mean when it lies in no obstacle; otherwise the mean of the
/// member unit with the smallest unit_cost (ties to the smaller unit index).
/// Uses `region.members` for the mean, falling back to unit sums when the
/// members list is empty.
CenterResult find_center(const Region& region, std::span<const Unit> units,
                         std::span<const Point> points, std::span<const Polygon> obstacles,
                         const VisibilityGraph& graph);

}  // namespace cpo
