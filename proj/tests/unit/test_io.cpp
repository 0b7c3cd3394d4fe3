#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpo/error.hpp"
#include "cpo/io.hpp"
#include "cpo/pipeline.hpp"
#include "cpo/svg.hpp"
#include "oracles.hpp"

namespace cpo {
namespace {

namespace fs = std::filesystem;

PointSet points_from(const std::string& text) {
  std::istringstream in(text);
  return parse_points(in);
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cpo_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(LoadPoints, TwoPointsAndDerivedArea) {
  const PointSet s = points_from("0,0\n1,1");
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.points[1], (Point{1, 1}));
  EXPECT_NEAR(s.area.bounds().min.x, -0.01, 1e-15);
  EXPECT_NEAR(s.area.bounds().max.y, 1.01, 1e-15);
}

TEST(LoadPoints, HeaderCommentsAndBlankLines) {
  const PointSet s = points_from("# survey\nx,y\n\n 0.5 , 2\n# mid\n3,-1e-3\n");
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_EQ(s.points[0], (Point{0.5, 2}));
  EXPECT_EQ(s.points[1], (Point{3, -1e-3}));
}

TEST(LoadPoints, MalformedLineNamesLine) {
  try {
    points_from("0,abc");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    points_from("x,y\n1,2\n3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(points_from("1,2\nnan,3\n"), ParseError);
  EXPECT_THROW(points_from("1,2,3\n"), ParseError);
}

TEST(LoadPoints, EmptyFileIsAnError) {
  EXPECT_THROW(points_from(""), InputError);
  EXPECT_THROW(points_from("x,y\n# nothing\n"), InputError);
  EXPECT_THROW(load_points(scratch("does-not-exist.csv")), IoError);
}

TEST(LoadObstacles, Examples) {
  EXPECT_TRUE(parse_obstacles("[]").polygons.empty());
  const ObstacleSet one = parse_obstacles("[[[0,0],[1,0],[1,1],[0,1]]]");
  ASSERT_EQ(one.polygons.size(), 1u);
  EXPECT_FALSE(one.polygons[0].reoriented());
  EXPECT_TRUE(one.warnings.empty());
  try {
    parse_obstacles("[[[0,0],[1,0],[1,1],[0,1]], [[0,0],[1,1],[1,0],[0,1]]]");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.polygon(), std::optional<std::size_t>(1));
  }
}

TEST(LoadObstacles, ClockwiseIsReversedWithWarning) {
  const ObstacleSet s = parse_obstacles("[[[0,1],[1,1],[1,0],[0,0]]]");
  ASSERT_EQ(s.polygons.size(), 1u);
  EXPECT_TRUE(s.polygons[0].reoriented());
  EXPECT_EQ(s.warnings.size(), 1u);
}

TEST(LoadObstacles, MalformedText) {
  EXPECT_THROW(parse_obstacles("[[[0,0],[1,0]"), ParseError);
  EXPECT_THROW(parse_obstacles("{\"a\": 1}"), ValidationError);
  EXPECT_THROW(parse_obstacles("[[[0,0],[1,\"x\"],[1,1]]]"), ValidationError);
  try {
    parse_obstacles("[\n[[0,0],[1,0],[1,1]],\n oops\n]");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(LoadObstacles, RejectsPointStrictlyInside) {
  const fs::path p = scratch("square.json");
  write_text_file(p, "[[[0,0],[1,0],[1,1],[0,1]]]");
  const std::vector<Point> ok{{2, 2}, {1, 0.5}};
  EXPECT_EQ(load_obstacles(p, ok).polygons.size(), 1u);
  const std::vector<Point> bad{{2, 2}, {0.5, 0.5}};
  try {
    load_obstacles(p, bad);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_EQ(e.index(), std::optional<std::size_t>(1));
  }
}

ClusteringResult sample_result() {
  std::vector<Point> pts;
  for (int i = 0; i < 40; ++i) pts.push_back({0.1 + 0.002 * i, 0.1 + 0.001 * i});
  for (int i = 0; i < 40; ++i) pts.push_back({0.9 - 0.002 * i, 0.9 - 0.001 * i});
  pts.push_back({0.5, 0.9});
  Config cfg;
  cfg.t_target = 5;
  const std::vector<Polygon> obstacles{Polygon(oracle::box(0.45, 0.3, 0.55, 0.7))};
  return run_cpo(pts, obstacles, cfg);
}

TEST(WriteResult, ByteStableAndStructured) {
  const ClusteringResult r = sample_result();
  const fs::path a = scratch("a.json");
  const fs::path b = scratch("b.json");
  write_result(r, a);
  write_result(sample_result(), b);
  const std::string text = slurp(a);
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text, format_result(r));

  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["grid"]["divisions"], r.grid.divisions);
  EXPECT_EQ(j["clusters"].size(), r.clusters.size());
  EXPECT_EQ(j["noise"].size(), r.noise.size());
  // Fixed key order.
  EXPECT_LT(text.find("\"grid\""), text.find("\"clusters\""));
  EXPECT_LT(text.find("\"clusters\""), text.find("\"noise\""));
}

TEST(WriteResult, EmptyClusters) {
  ClusteringResult r;
  r.noise = {0, 1, 2};
  const auto j = nlohmann::json::parse(format_result(r));
  EXPECT_TRUE(j["clusters"].empty());
  EXPECT_EQ(j["noise"].size(), 3u);
}

TEST(WriteResult, UnwritablePath) {
  EXPECT_THROW(write_result(ClusteringResult{}, "/nonexistent-dir/x/result.json"), IoError);
}

TEST(Svg, HeaderAndOneShapePerObstacle) {
  std::vector<Point> pts{{0.1, 0.1}, {0.9, 0.9}};
  const std::vector<Polygon> obstacles{Polygon(oracle::box(0.4, 0.4, 0.6, 0.6)),
                                       Polygon({{0.2, 0.7}, {0.3, 0.7}, {0.25, 0.8}})};
  Config cfg;
  cfg.t_target = 1;
  const ClusteringResult r = run_cpo(pts, obstacles, cfg);
  const std::string svg = svg_document(r, pts, obstacles);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  std::size_t polygons = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1)) {
    ++polygons;
  }
  EXPECT_EQ(polygons, obstacles.size());
  EXPECT_EQ(svg, svg_document(r, pts, obstacles));
  const fs::path p = scratch("plot.svg");
  render_svg(r, pts, obstacles, p);
  EXPECT_EQ(slurp(p), svg);
}

}  // namespace
}  // namespace cpo
