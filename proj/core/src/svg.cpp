#include "cpo/svg.hpp"

#include <array>
#include <string_view>

#include <fmt/format.h>

#include "cpo/io.hpp"

namespace cpo {

namespace {

constexpr std::array<std::string_view, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

struct Canvas {
  Rect area;
  double width = 800.0;
  double height = 800.0;

  explicit Canvas(const Rect& a) : area(a) {
    height = width * a.height() / a.width();
  }
  double px(double x) const { return (x - area.min.x) / area.width() * width; }
  double py(double y) const { return height - (y - area.min.y) / area.height() * height; }
};

}  // namespace

std::string svg_document(const ClusteringResult& result, std::span<const Point> points,
                         std::span<const Polygon> obstacles) {
  const Canvas cv(result.grid.area);
  std::string out;
  auto emit = [&out](std::string_view s) { out.append(s); };

  emit("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
  emit(fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
      "viewBox=\"0 0 {0:.3f} {1:.3f}\">\n",
      cv.width, cv.height));
  emit("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

  emit("<g class=\"grid\" stroke=\"#cccccc\" stroke-width=\"0.5\">\n");
  const std::size_t g = result.grid.divisions;
  const Rect& a = result.grid.area;
  for (std::size_t k = 0; k <= g; ++k) {
    const double x = cv.px(axis_edge(a.min.x, a.max.x, g, k));
    const double y = cv.py(axis_edge(a.min.y, a.max.y, g, k));
    emit(fmt::format("<line x1=\"{0:.3f}\" y1=\"0\" x2=\"{0:.3f}\" y2=\"{1:.3f}\"/>\n", x,
                     cv.height));
    emit(fmt::format("<line x1=\"0\" y1=\"{0:.3f}\" x2=\"{1:.3f}\" y2=\"{0:.3f}\"/>\n", y,
                     cv.width));
  }
  emit("</g>\n");

  emit("<g class=\"obstacles\" fill=\"#999999\" fill-opacity=\"0.8\" stroke=\"#666666\">\n");
  for (const Polygon& poly : obstacles) {
    emit("<polygon points=\"");
    for (std::size_t i = 0; i < poly.size(); ++i) {
      emit(fmt::format("{}{:.3f},{:.3f}", i == 0 ? "" : " ", cv.px(poly[i].x), cv.py(poly[i].y)));
    }
    emit("\"/>\n");
  }
  emit("</g>\n");

  std::vector<std::string_view> colour(points.size(), "#000000");
  for (const Cluster& c : result.clusters) {
    for (std::size_t i : c.points) colour[i] = kPalette[c.id % kPalette.size()];
  }
  emit("<g class=\"points\">\n");
  for (std::size_t i = 0; i < points.size(); ++i) {
    emit(fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"1.5\" fill=\"{}\"/>\n",
                     cv.px(points[i].x), cv.py(points[i].y), colour[i]));
  }
  emit("</g>\n");

  emit("<g class=\"centers\" stroke=\"#000000\" stroke-width=\"2\">\n");
  for (const Cluster& c : result.clusters) {
    const double x = cv.px(c.center.x);
    const double y = cv.py(c.center.y);
    emit(fmt::format("<path d=\"M{:.3f},{:.3f} L{:.3f},{:.3f} M{:.3f},{:.3f} L{:.3f},{:.3f}\"/>\n",
                     x - 6, y - 6, x + 6, y + 6, x - 6, y + 6, x + 6, y - 6));
  }
  emit("</g>\n");
  emit("</svg>\n");
  return out;
}

void render_svg(const ClusteringResult& result, std::span<const Point> points,
                std::span<const Polygon> obstacles, const std::filesystem::path& path) {
  write_text_file(path, svg_document(result, points, obstacles));
}

}  // namespace cpo
