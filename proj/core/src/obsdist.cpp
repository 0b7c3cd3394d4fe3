#include "cpo/obsdist.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "cpo/error.hpp"

namespace cpo {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative slack under which two path lengths count as a tie.
double tie_slack(double length) { return 1e-12 * std::max(1.0, length); }

void require_free(Point p, std::span<const Polygon> obstacles, const char* role) {
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    if (point_strictly_inside(p, obstacles[i])) {
      throw InputError(std::string(role) + " point lies strictly inside obstacle " +
                           std::to_string(i),
                       i);
    }
  }
}

}  // namespace

std::size_t VisibilityGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : edges) total += list.size();
  return total / 2;
}

bool VisibilityGraph::has_edge(std::size_t i, std::size_t j) const {
  const auto& list = edges[i];
  const auto it = std::ranges::lower_bound(list, j, {}, &VisibilityEdge::to);
  return it != list.end() && it->to == j;
}

VisibilityGraph build_visibility_graph(std::span<const Polygon> obstacles) {
  VisibilityGraph g;
  for (std::size_t o = 0; o < obstacles.size(); ++o) {
    for (const Point& v : obstacles[o].vertices()) {
      g.nodes.push_back(v);
      g.obstacle_of.push_back(o);
    }
  }
  g.edges.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      if (!is_visible(g.nodes[i], g.nodes[j], obstacles)) continue;
      const double len = distance(g.nodes[i], g.nodes[j]);
      g.edges[i].push_back({j, len});
      g.edges[j].push_back({i, len});
    }
  }
  return g;
}

std::vector<bool> visible_nodes(Point p, std::span<const Polygon> obstacles,
                                const VisibilityGraph& graph) {
  std::vector<bool> out(graph.node_count());
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    out[i] = is_visible(p, graph.nodes[i], obstacles);
  }
  return out;
}

ShortestPathTree::ShortestPathTree(Point source, std::span<const Polygon> obstacles,
                                   const VisibilityGraph& graph)
    : source_(source), obstacles_(obstacles), graph_(&graph) {
  require_free(source, obstacles, "source");
  run(visible_nodes(source, obstacles, graph));
}

ShortestPathTree::ShortestPathTree(Point source, std::span<const Polygon> obstacles,
                                   const VisibilityGraph& graph,
                                   const std::vector<bool>& source_visibility)
    : source_(source), obstacles_(obstacles), graph_(&graph) {
  require_free(source, obstacles, "source");
  run(source_visibility);
}

void ShortestPathTree::run(const std::vector<bool>& source_visibility) {
  const auto& nodes = graph_->nodes;
  const std::size_t n = nodes.size();
  dist_.assign(n, kInf);
  pred_.assign(n, kNone);
  first_hop_.assign(n, kNone);
  std::vector<bool> done(n, false);

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t i = 0; i < n; ++i) {
    if (!source_visibility[i]) continue;
    dist_[i] = distance(source_, nodes[i]);
    first_hop_[i] = i;
    heap.emplace(dist_[i], i);
  }

  while (!heap.empty()) {
    const auto [d, i] = heap.top();
    heap.pop();
    if (done[i] || d > dist_[i]) continue;
    done[i] = true;
    for (const VisibilityEdge& e : graph_->edges[i]) {
      const std::size_t j = e.to;
      if (done[j]) continue;
      const double nd = d + e.length;
      if (nd < dist_[j] - tie_slack(nd)) {
        dist_[j] = nd;
        pred_[j] = i;
        first_hop_[j] = first_hop_[i];
        heap.emplace(nd, j);
      } else if (nd <= dist_[j] + tie_slack(nd) && first_hop_[j] != first_hop_[i] &&
                 lex_less(nodes[first_hop_[i]], nodes[first_hop_[j]])) {
        pred_[j] = i;
        first_hop_[j] = first_hop_[i];
        if (nd < dist_[j]) {
          dist_[j] = nd;
          heap.emplace(nd, j);
        }
      }
    }
  }
}

std::optional<double> ShortestPathTree::node_distance(std::size_t node) const {
  if (dist_[node] == kInf) return std::nullopt;
  return dist_[node];
}

std::optional<ShortestPathTree::Arrival> ShortestPathTree::arrive(
    Point target, const std::vector<bool>& target_visibility) const {
  const auto& nodes = graph_->nodes;
  std::optional<Arrival> best;
  if (is_visible(source_, target, obstacles_)) {
    best = Arrival{distance(source_, target), std::nullopt};
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!target_visibility[i] || dist_[i] == kInf) continue;
    const double len = dist_[i] + distance(nodes[i], target);
    if (!best || len < best->length - tie_slack(len)) {
      best = Arrival{len, i};
    } else if (best->via && len <= best->length + tie_slack(len) &&
               lex_less(nodes[first_hop_[i]], nodes[first_hop_[*best->via]])) {
      best = Arrival{std::min(len, best->length), i};
    }
  }
  return best;
}

std::optional<double> ShortestPathTree::distance_to(Point target) const {
  require_free(target, obstacles_, "target");
  return distance_to(target, visible_nodes(target, obstacles_, *graph_));
}

std::optional<double> ShortestPathTree::distance_to(
    Point target, const std::vector<bool>& target_visibility) const {
  const auto a = arrive(target, target_visibility);
  if (!a) return std::nullopt;
  return a->length;
}

std::optional<std::vector<Point>> ShortestPathTree::path_to(Point target) const {
  require_free(target, obstacles_, "target");
  const auto a = arrive(target, visible_nodes(target, obstacles_, *graph_));
  if (!a) return std::nullopt;
  std::vector<Point> path{source_};
  if (a->via) {
    std::vector<Point> bends;
    for (std::size_t i = *a->via; i != kNone; i = pred_[i]) bends.push_back(graph_->nodes[i]);
    path.insert(path.end(), bends.rbegin(), bends.rend());
  }
  if (!(target == source_)) path.push_back(target);
  return path;
}

std::optional<double> obstructed_distance(Point a, Point b, std::span<const Polygon> obstacles,
                                          const VisibilityGraph& graph) {
  require_free(a, obstacles, "first");
  require_free(b, obstacles, "second");
  // Always solve from the lexicographically smaller endpoint so the value is
  // bit-identical in both argument orders.
  if (lex_less(b, a)) std::swap(a, b);
  if (is_visible(a, b, obstacles)) return distance(a, b);
  return ShortestPathTree(a, obstacles, graph).distance_to(b);
}

std::optional<std::vector<Point>> shortest_obstructed_path(Point a, Point b,
                                                           std::span<const Polygon> obstacles,
                                                           const VisibilityGraph& graph) {
  require_free(a, obstacles, "first");
  require_free(b, obstacles, "second");
  const bool swapped = lex_less(b, a);
  if (swapped) std::swap(a, b);
  auto path = ShortestPathTree(a, obstacles, graph).path_to(b);
  if (path && swapped) std::reverse(path->begin(), path->end());
  return path;
}

double polyline_length(std::span<const Point> path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) total += distance(path[i - 1], path[i]);
  return total;
}

ObstructedSpace::ObstructedSpace(std::vector<Polygon> obstacles)
    : obstacles_(std::move(obstacles)), graph_(build_visibility_graph(obstacles_)) {}

}  // namespace cpo
