#include "cpo/geometry.hpp"

#include <algorithm>
#include <limits>

#include "cpo/error.hpp"

namespace cpo {

Rect bounding_rect(std::span<const Point> points) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Rect r{{inf, inf}, {-inf, -inf}};
  for (const Point& p : points) {
    r.min.x = std::min(r.min.x, p.x);
    r.min.y = std::min(r.min.y, p.y);
    r.max.x = std::max(r.max.x, p.x);
    r.max.y = std::max(r.max.y, p.y);
  }
  return r;
}

double signed_area2(std::span<const Point> ring) {
  double sum = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    sum += cross(ring[i], ring[(i + 1) % n]);
  }
  return sum;
}

int orientation(Point a, Point b, Point c) {
  const Point ab = b - a;
  const double len = norm(ab);
  if (len <= kEpsilon) return 0;
  const double d = cross(ab, c - a) / len;
  if (d > kEpsilon) return 1;
  if (d < -kEpsilon) return -1;
  return 0;
}

double distance_to_segment(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, s.at(t));
}

bool point_on_segment(Point p, const Segment& s) {
  return distance_to_segment(p, s) <= kEpsilon;
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
  if (point_on_segment(s1.a, s2) || point_on_segment(s1.b, s2) ||
      point_on_segment(s2.a, s1) || point_on_segment(s2.b, s1)) {
    return true;
  }
  if (s1.degenerate() || s2.degenerate()) return false;
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool is_simple_ring(std::span<const Point> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  auto edge = [&](std::size_t i) { return Segment{ring[i], ring[(i + 1) % n]}; };
  for (std::size_t i = 0; i < n; ++i) {
    if (edge(i).degenerate()) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared vertex is expected; the far endpoints must not lie on the
        // other edge (a fold-back or a spike).
        const Segment first = (j == i + 1) ? edge(i) : edge(j);
        const Segment second = (j == i + 1) ? edge(j) : edge(i);
        if (point_on_segment(second.b, first) || point_on_segment(first.a, second)) {
          return false;
        }
        continue;
      }
      if (segments_intersect(edge(i), edge(j))) return false;
    }
  }
  return true;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw ValidationError("polygon needs at least 3 vertices");
  }
  for (const Point& p : vertices_) {
    if (!is_finite(p)) throw ValidationError("polygon vertex is not finite");
  }
  if (!is_simple_ring(vertices_)) {
    throw ValidationError("polygon is not simple (self-intersecting)");
  }
  const double area2 = signed_area2(vertices_);
  if (std::abs(area2) <= kEpsilon) {
    throw ValidationError("polygon has zero area");
  }
  if (area2 < 0) {
    std::reverse(vertices_.begin(), vertices_.end());
    reoriented_ = true;
  }
  area_ = std::abs(area2) / 2;
  bounds_ = bounding_rect(vertices_);
}

bool point_on_boundary(Point p, const Polygon& poly) {
  if (!poly.bounds().contains(p, kEpsilon)) return false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (point_on_segment(p, poly.edge(i))) return true;
  }
  return false;
}

namespace {

// Even-odd ray cast; boundary behaviour is undefined and handled by callers.
bool crossing_number_inside(Point p, const Polygon& poly) {
  bool inside = false;
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if ((v[i].y > p.y) != (v[j].y > p.y)) {
      const double x_cross = (v[j].x - v[i].x) * (p.y - v[i].y) / (v[j].y - v[i].y) + v[i].x;
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

bool point_in_polygon(Point p, const Polygon& poly) {
  if (!poly.bounds().contains(p, kEpsilon)) return false;
  if (point_on_boundary(p, poly)) return true;
  return crossing_number_inside(p, poly);
}

bool point_strictly_inside(Point p, const Polygon& poly) {
  if (!poly.bounds().contains(p)) return false;
  if (point_on_boundary(p, poly)) return false;
  return crossing_number_inside(p, poly);
}

bool point_in_any(Point p, std::span<const Polygon> obstacles) {
  return std::ranges::any_of(obstacles, [&](const Polygon& o) { return point_in_polygon(p, o); });
}

bool point_strictly_inside_any(Point p, std::span<const Polygon> obstacles) {
  return std::ranges::any_of(obstacles,
                             [&](const Polygon& o) { return point_strictly_inside(p, o); });
}

namespace {

Rect segment_box(const Segment& s) {
  return {{std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y)},
          {std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)}};
}

// Appends the parameters along non-degenerate s where it meets the boundary
// of poly. Between two consecutive parameters the open sub-segment is either
// wholly inside or wholly outside the polygon.
void boundary_contacts(const Segment& s, const Polygon& poly, std::vector<double>& ts) {
  const Point d = s.b - s.a;
  const double len2 = dot(d, d);
  auto project = [&](Point p) { return std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0); };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    const Point ed = e.b - e.a;
    if (point_on_segment(e.a, s)) ts.push_back(project(e.a));
    if (!segments_intersect(s, e)) continue;
    const double denom = cross(d, ed);
    if (std::abs(denom) > 1e-12 * std::sqrt(len2 * dot(ed, ed))) {
      ts.push_back(std::clamp(cross(e.a - s.a, ed) / denom, 0.0, 1.0));
    } else {
      ts.push_back(project(e.a));
      ts.push_back(project(e.b));
    }
  }
}

// Offset used to look at both sides of a seam between touching obstacles.
constexpr double kSeamProbe = 100 * kEpsilon;

}  // namespace

bool segment_crosses_polygon_interior(const Segment& s, const Polygon& poly) {
  if (!segment_box(s).overlaps(poly.bounds())) return false;
  if (s.degenerate()) return point_strictly_inside(s.a, poly);
  if (point_strictly_inside(s.a, poly) || point_strictly_inside(s.b, poly)) return true;

  std::vector<double> ts{0.0, 1.0};
  boundary_contacts(s, poly, ts);
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] <= 0.0) continue;
    if (point_strictly_inside(s.at((ts[i] + ts[i + 1]) / 2), poly)) return true;
  }
  return false;
}

bool rect_intersects_polygon(const Rect& r, const Polygon& poly) {
  if (!r.overlaps(poly.bounds(), kEpsilon)) return false;
  for (const Point& v : poly.vertices()) {
    if (r.contains(v, kEpsilon)) return true;
  }
  const Point corners[4] = {r.min, {r.max.x, r.min.y}, r.max, {r.min.x, r.max.y}};
  for (const Point& c : corners) {
    if (point_in_polygon(c, poly)) return true;
  }
  for (int k = 0; k < 4; ++k) {
    const Segment side{corners[k], corners[(k + 1) % 4]};
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (segments_intersect(side, poly.edge(i))) return true;
    }
  }
  return false;
}

bool is_visible(Point a, Point b, std::span<const Polygon> obstacles) {
  const Segment s{a, b};
  const Rect box = segment_box(s);
  std::vector<const Polygon*> near;
  for (const Polygon& o : obstacles) {
    if (!box.overlaps(o.bounds(), kEpsilon)) continue;
    if (segment_crosses_polygon_interior(s, o)) return false;
    near.push_back(&o);
  }
  if (near.size() < 2 || s.degenerate()) return true;

  // A segment sliding along the seam of two touching obstacles runs through
  // the interior of their union although it grazes each one alone.
  std::vector<double> ts{0.0, 1.0};
  for (const Polygon* o : near) boundary_contacts(s, *o, ts);
  std::sort(ts.begin(), ts.end());
  const Point d = s.b - s.a;
  const Point normal = Point{-d.y, d.x} * (kSeamProbe / norm(d));
  auto covered = [&](Point p) {
    return std::ranges::any_of(near, [&](const Polygon* o) { return point_in_polygon(p, *o); });
  };
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i + 1] - ts[i] <= 0.0) continue;
    const Point m = s.at((ts[i] + ts[i + 1]) / 2);
    if (covered(m) && covered(m + normal) && covered(m - normal)) return false;
  }
  return true;
}

}  // namespace cpo
