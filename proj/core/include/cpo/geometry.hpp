#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace cpo {

/// Absolute tolerance, in coordinate units, used by every orientation and
/// on-boundary test.
inline constexpr double kEpsilon = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline Point operator*(double s, Point a) { return a * s; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

/// Lexicographic (x, then y) order.
inline bool lex_less(Point a, Point b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
  Point a;
  Point b;

  bool degenerate() const { return distance(a, b) <= kEpsilon; }
  double length() const { return distance(a, b); }
  Point at(double t) const { return a + (b - a) * t; }
};

/// Closed axis-aligned rectangle.
struct Rect {
  Point min;
  Point max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  Point center() const { return {(min.x + max.x) / 2, (min.y + max.y) / 2}; }

  bool contains(Point p, double tolerance = 0.0) const {
    return p.x >= min.x - tolerance && p.x <= max.x + tolerance &&
           p.y >= min.y - tolerance && p.y <= max.y + tolerance;
  }
  bool overlaps(const Rect& o, double tolerance = 0.0) const {
    return min.x <= o.max.x + tolerance && o.min.x <= max.x + tolerance &&
           min.y <= o.max.y + tolerance && o.min.y <= max.y + tolerance;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

Rect bounding_rect(std::span<const Point> points);

/// Simple, hole-free polygon stored counter-clockwise with no repeated
/// closing vertex. The constructor validates and throws ValidationError;
/// clockwise input is reversed and `reoriented()` reports it.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  Segment edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }
  const Rect& bounds() const { return bounds_; }
  double area() const { return area_; }
  bool reoriented() const { return reoriented_; }

 private:
  std::vector<Point> vertices_;
  Rect bounds_;
  double area_ = 0.0;
  bool reoriented_ = false;
};

/// Twice the signed area; positive for counter-clockwise rings.
double signed_area2(std::span<const Point> ring);

/// True iff the closed ring has no two non-adjacent edges touching and no
/// adjacent edges folding back over each other.
bool is_simple_ring(std::span<const Point> ring);

/// -1, 0 or +1: side of `c` relative to the directed line a->b, with a
/// perpendicular-distance dead band of kEpsilon.
int orientation(Point a, Point b, Point c);

double distance_to_segment(Point p, const Segment& s);
bool point_on_segment(Point p, const Segment& s);

/// Closed segments share at least one point.
bool segments_intersect(const Segment& s1, const Segment& s2);

bool point_on_boundary(Point p, const Polygon& poly);

/// Closed containment: the boundary counts as inside.
bool point_in_polygon(Point p, const Polygon& poly);

/// Open containment: inside and farther than kEpsilon from the boundary.
bool point_strictly_inside(Point p, const Polygon& poly);

bool point_in_any(Point p, std::span<const Polygon> obstacles);
bool point_strictly_inside_any(Point p, std::span<const Polygon> obstacles);

/// Some point of `s` lies strictly inside `poly`. Grazing a vertex or
/// running along an edge is not a crossing.
bool segment_crosses_polygon_interior(const Segment& s, const Polygon& poly);

/// Closed rectangle and closed polygon share at least one point.
bool rect_intersects_polygon(const Rect& r, const Polygon& poly);

/// Segment a-b crosses no obstacle interior, and does not run along a seam
/// where two obstacles touch (the interior of their union).
bool is_visible(Point a, Point b, std::span<const Polygon> obstacles);

}  // namespace cpo
