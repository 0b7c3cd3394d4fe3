#pragma once

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpo/geometry.hpp"
#include "cpo/grid.hpp"
#include "cpo/pipeline.hpp"

namespace cpo {

struct PointSet {
  std::vector<Point> points;
  SpatialArea area;
};

/// Points text: one "x,y" pair per line. Blank lines and lines starting
/// with '#' are ignored; the first content line is a header and skipped when
/// neither field is numeric. Throws ParseError with the 1-based line number,
/// or InputError when no points are present.
PointSet parse_points(std::istream& in);
PointSet load_points(const std::filesystem::path& path);

struct ObstacleSet {
  std::vector<Polygon> polygons;
  std::vector<std::string> warnings;
};

/// Obstacles JSON: an array of polygons, each an array of [x, y] pairs
/// without a closing repeat. Clockwise polygons are reversed and reported in
/// `warnings`. Throws ParseError on malformed text and ValidationError naming
/// the polygon index on invalid geometry.
ObstacleSet parse_obstacles(std::string_view text);
ObstacleSet load_obstacles(const std::filesystem::path& path);

/// Same as load_obstacles, then rejects any point strictly inside an obstacle.
ObstacleSet load_obstacles(const std::filesystem::path& path, std::span<const Point> points);

/// Result JSON with a fixed key order; byte-stable for identical results.
std::string format_result(const ClusteringResult& result);
void write_result(const ClusteringResult& result, const std::filesystem::path& path);

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace cpo
