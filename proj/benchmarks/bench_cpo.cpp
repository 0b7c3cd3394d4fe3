#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "cpo/geometry.hpp"
#include "cpo/obsdist.hpp"
#include "cpo/pipeline.hpp"

namespace {

std::vector<cpo::Polygon> obstacle_ring(std::size_t count, std::size_t sides) {
  std::vector<cpo::Polygon> out;
  for (std::size_t k = 0; k < count; ++k) {
    const double cx = 0.15 + 0.7 * static_cast<double>(k % 4) / 3.0;
    const double cy = 0.15 + 0.7 * static_cast<double>(k / 4 % 4) / 3.0;
    std::vector<cpo::Point> v;
    for (std::size_t i = 0; i < sides; ++i) {
      const double a = 6.283185307179586 * static_cast<double>(i) / static_cast<double>(sides);
      v.push_back({cx + 0.06 * std::cos(a), cy + 0.06 * std::sin(a)});
    }
    out.emplace_back(v);
  }
  return out;
}

std::vector<cpo::Point> free_points(std::size_t n, const std::vector<cpo::Polygon>& obstacles,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<cpo::Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const cpo::Point p{u(rng), u(rng)};
    if (!cpo::point_in_any(p, obstacles)) pts.push_back(p);
  }
  return pts;
}

void BM_RunCpo(benchmark::State& state) {
  const auto obstacles = obstacle_ring(3, 6);
  const auto pts = free_points(static_cast<std::size_t>(state.range(0)), obstacles, 1);
  const cpo::SpatialArea area({{0, 0}, {1, 1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpo::run_cpo(pts, obstacles, cpo::Config{}, area));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunCpo)->Arg(10000)->Arg(40000)->Arg(160000)->Unit(benchmark::kMillisecond);

void BM_VisibilityGraph(benchmark::State& state) {
  const auto obstacles = obstacle_ring(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(cpo::build_visibility_graph(obstacles));
  state.counters["vertices"] = static_cast<double>(state.range(0) * 6);
}
BENCHMARK(BM_VisibilityGraph)->DenseRange(2, 16, 2)->Unit(benchmark::kMicrosecond);

void BM_ObstructedDistance(benchmark::State& state) {
  const auto obstacles = obstacle_ring(static_cast<std::size_t>(state.range(0)), 6);
  const cpo::VisibilityGraph vg = cpo::build_visibility_graph(obstacles);
  const auto pts = free_points(256, obstacles, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cpo::obstructed_distance(pts[i % 256], pts[(i * 7 + 3) % 256], obstacles, vg));
    ++i;
  }
}
BENCHMARK(BM_ObstructedDistance)->DenseRange(2, 16, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
