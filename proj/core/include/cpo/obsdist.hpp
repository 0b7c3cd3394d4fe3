#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cpo/geometry.hpp"

namespace cpo {

struct VisibilityEdge {
  std::size_t to = 0;
  double length = 0.0;
};

/// Undirected graph on all obstacle vertices; an edge joins every mutually
/// visible pair. Neighbour lists are sorted by target node.
struct VisibilityGraph {
  std::vector<Point> nodes;
  std::vector<std::size_t> obstacle_of;  // owning obstacle per node
  std::vector<std::vector<VisibilityEdge>> edges;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const;  // undirected
  bool has_edge(std::size_t i, std::size_t j) const;
};

/// O(|V|^2) pairwise construction. Coincident vertices of different
/// obstacles stay distinct nodes.
VisibilityGraph build_visibility_graph(std::span<const Polygon> obstacles);

/// Which graph nodes a free point sees.
std::vector<bool> visible_nodes(Point p, std::span<const Polygon> obstacles,
                                const VisibilityGraph& graph);

/// Dijkstra tree from one query point temporarily joined to the visibility
/// graph. Answers distance and path queries to any free target.
///
/// Equal-length alternatives are resolved toward the lexicographically
/// smaller first bend after the source.
class ShortestPathTree {
 public:
  /// Throws InputError if `source` is strictly inside an obstacle.
  ShortestPathTree(Point source, std::span<const Polygon> obstacles,
                   const VisibilityGraph& graph);
  ShortestPathTree(Point source, std::span<const Polygon> obstacles,
                   const VisibilityGraph& graph, const std::vector<bool>& source_visibility);

  Point source() const { return source_; }
  std::optional<double> node_distance(std::size_t node) const;

  /// nullopt when the target cannot be reached.
  std::optional<double> distance_to(Point target) const;
  std::optional<double> distance_to(Point target, const std::vector<bool>& target_visibility) const;

  std::optional<std::vector<Point>> path_to(Point target) const;

 private:
  struct Arrival {
    double length;
    std::optional<std::size_t> via;  // last graph node before target
  };
  std::optional<Arrival> arrive(Point target, const std::vector<bool>& target_visibility) const;
  void run(const std::vector<bool>& source_visibility);

  Point source_;
  std::span<const Polygon> obstacles_;
  const VisibilityGraph* graph_;
  std::vector<double> dist_;
  std::vector<std::size_t> pred_;       // kNone for direct from source
  std::vector<std::size_t> first_hop_;
};

/// Length of the shortest path from a to b that avoids every obstacle
/// interior. nullopt when unreachable; InputError when either endpoint is
/// strictly inside an obstacle. Exactly symmetric in (a, b).
std::optional<double> obstructed_distance(Point a, Point b, std::span<const Polygon> obstacles,
                                          const VisibilityGraph& graph);

/// Vertex sequence of that path: [a, obstacle vertices..., b], or [a] when
/// a == b.
std::optional<std::vector<Point>> shortest_obstructed_path(Point a, Point b,
                                                           std::span<const Polygon> obstacles,
                                                           const VisibilityGraph& graph);

double polyline_length(std::span<const Point> path);

/// Obstacles plus their cached visibility graph.
class ObstructedSpace {
 public:
  explicit ObstructedSpace(std::vector<Polygon> obstacles);

  std::span<const Polygon> obstacles() const { return obstacles_; }
  const VisibilityGraph& graph() const { return graph_; }

  std::optional<double> distance(Point a, Point b) const {
    return obstructed_distance(a, b, obstacles_, graph_);
  }
  std::optional<std::vector<Point>> path(Point a, Point b) const {
    return shortest_obstructed_path(a, b, obstacles_, graph_);
  }

 private:
  std::vector<Polygon> obstacles_;
  VisibilityGraph graph_;
};

}  // namespace cpo
