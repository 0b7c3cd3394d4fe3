#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "cpo/geometry.hpp"
#include "cpo/pipeline.hpp"

namespace cpo {

/// SVG drawing of a clustering: thin grid lines, one gray <polygon> per
/// obstacle, points coloured by cluster (noise black) and a cross at each
/// center. Output is deterministic.
std::string svg_document(const ClusteringResult& result, std::span<const Point> points,
                         std::span<const Polygon> obstacles);

void render_svg(const ClusteringResult& result, std::span<const Point> points,
                std::span<const Polygon> obstacles, const std::filesystem::path& path);

}  // namespace cpo
