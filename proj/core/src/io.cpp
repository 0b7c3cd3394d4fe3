#include "cpo/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cpo/error.hpp"

namespace cpo {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

PointSet parse_points(std::istream& in) {
  std::vector<Point> points;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const bool first = !seen_content;
    seen_content = true;

    const auto comma = line.find(',');
    const std::string_view xs = comma == std::string_view::npos ? line : line.substr(0, comma);
    const std::string_view ys =
        comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
    const auto x = parse_number(xs);
    const auto y = parse_number(ys);
    if (first && !x && !y) continue;  // header
    if (comma == std::string_view::npos || ys.find(',') != std::string_view::npos) {
      throw ParseError("expected exactly two comma-separated values", line_no);
    }
    if (!x) throw ParseError("invalid x coordinate '" + std::string(trim(xs)) + "'", line_no);
    if (!y) throw ParseError("invalid y coordinate '" + std::string(trim(ys)) + "'", line_no);
    points.push_back({*x, *y});
  }
  if (points.empty()) throw InputError("input contains no points");
  SpatialArea area = derive_area(points);
  return {std::move(points), area};
}

PointSet load_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_points(in);
}

ObstacleSet parse_obstacles(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n'));
    throw ParseError("malformed obstacle JSON", line);
  }
  if (!doc.is_array()) throw ValidationError("obstacle file must hold a JSON array of polygons");

  ObstacleSet out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& poly = doc[i];
    const std::string tag = "obstacle " + std::to_string(i) + ": ";
    if (!poly.is_array()) throw ValidationError(tag + "expected an array of [x, y] pairs", i);
    std::vector<Point> vertices;
    for (const json& v : poly) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ValidationError(tag + "every vertex must be a [x, y] number pair", i);
      }
      vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    try {
      Polygon p(std::move(vertices));
      if (p.reoriented()) {
        out.warnings.push_back(tag + "clockwise vertex order reversed to counter-clockwise");
      }
      out.polygons.push_back(std::move(p));
    } catch (const ValidationError& e) {
      throw ValidationError(tag + e.what(), i);
    }
  }
  return out;
}

ObstacleSet load_obstacles(const std::filesystem::path& path) {
  return parse_obstacles(read_file(path));
}

ObstacleSet load_obstacles(const std::filesystem::path& path, std::span<const Point> points) {
  ObstacleSet set = load_obstacles(path);
  check_points_outside_obstacles(points, set.polygons);
  return set;
}

std::string format_result(const ClusteringResult& result) {
  using nlohmann::ordered_json;
  const GridSummary& gs = result.grid;

  ordered_json grid;
  grid["divisions"] = gs.divisions;
  grid["threshold"] = gs.threshold;
  grid["cells"] = gs.cell_count;
  grid["obstructed_cells"] = gs.obstructed_cells;
  grid["pieces_per_axis"] = gs.pieces_per_axis;
  grid["area"] = {gs.area.min.x, gs.area.min.y, gs.area.max.x, gs.area.max.y};

  ordered_json clusters = ordered_json::array();
  for (const Cluster& c : result.clusters) {
    ordered_json j;
    j["id"] = c.id;
    j["center"] = {c.center.x, c.center.y};
    j["kind"] = std::string(to_string(c.kind));
    j["cost"] = c.cost ? ordered_json(*c.cost) : ordered_json(nullptr);
    j["n_points"] = c.n_points;
    ordered_json units = ordered_json::array();
    for (const UnitId& u : c.units) {
      const std::size_t g = gs.divisions == 0 ? 1 : gs.divisions;
      units.push_back({u.cell / g, u.cell % g, u.sub});
    }
    j["units"] = std::move(units);
    j["points"] = c.points;
    clusters.push_back(std::move(j));
  }

  ordered_json doc;
  doc["grid"] = std::move(grid);
  doc["clusters"] = std::move(clusters);
  doc["noise"] = result.noise;
  return doc.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

void write_result(const ClusteringResult& result, const std::filesystem::path& path) {
  write_text_file(path, format_result(result));
}

}  // namespace cpo
