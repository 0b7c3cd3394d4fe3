// cpo: cluster 2D points around polygonal obstacles.
//
//   cpo --points pts.csv [--obstacles obs.json] [--out result.json]
//       [--svg plot.svg] [--t-target 100] [--dense-factor 1]
//       [--pieces-per-axis N] [--area minx,miny,maxx,maxy]
//
// Exit status is 0 on success and 1 on any input, validation or I/O error,
// with a one-line diagnostic on stderr.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpo/error.hpp"
#include "cpo/io.hpp"
#include "cpo/pipeline.hpp"
#include "cpo/svg.hpp"

namespace {

struct Options {
  std::string points;
  std::string obstacles;
  std::string out;
  std::string svg;
  double t_target = 100.0;
  double dense_factor = 1.0;
  std::size_t pieces_per_axis = 0;
  std::vector<double> area;
};

int run(const Options& opt) {
  cpo::PointSet input = cpo::load_points(opt.points);

  cpo::ObstacleSet obstacles;
  if (!opt.obstacles.empty()) {
    obstacles = cpo::load_obstacles(opt.obstacles, input.points);
    for (const std::string& w : obstacles.warnings) std::cerr << "warning: " << w << "\n";
  }

  std::optional<cpo::SpatialArea> area;
  if (!opt.area.empty()) {
    area = cpo::SpatialArea({{opt.area[0], opt.area[1]}, {opt.area[2], opt.area[3]}});
  }

  cpo::Config config;
  config.t_target = opt.t_target;
  config.dense_factor = opt.dense_factor;
  if (opt.pieces_per_axis > 0) config.pieces_per_axis = opt.pieces_per_axis;

  const cpo::ClusteringResult result =
      cpo::run_cpo(input.points, obstacles.polygons, config, area.value_or(input.area));

  if (opt.out.empty() || opt.out == "-") {
    std::cout << cpo::format_result(result);
  } else {
    cpo::write_result(result, opt.out);
  }
  if (!opt.svg.empty()) cpo::render_svg(result, input.points, obstacles.polygons, opt.svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid-based clustering of 2D points in the presence of polygonal obstacles"};
  Options opt;
  app.add_option("-p,--points", opt.points, "Points file, one x,y pair per line")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("-o,--obstacles", opt.obstacles, "Obstacles JSON: array of [[x,y],...] polygons")
      ->check(CLI::ExistingFile);
  app.add_option("-r,--out", opt.out, "Result JSON path (stdout when omitted or '-')");
  app.add_option("-s,--svg", opt.svg, "Optional SVG rendering path");
  app.add_option("-t,--t-target", opt.t_target, "Desired average points per cell")
      ->check(CLI::PositiveNumber);
  app.add_option("-d,--dense-factor", opt.dense_factor, "Dense threshold multiplier")
      ->check(CLI::PositiveNumber);
  app.add_option("--pieces-per-axis", opt.pieces_per_axis,
                 "Piece grid resolution inside obstructed cells (auto when omitted)")
      ->check(CLI::PositiveNumber);
  app.add_option("--area", opt.area, "Spatial area override: minx,miny,maxx,maxy")
      ->delimiter(',')
      ->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return run(opt);
  } catch (const cpo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
