#include <doctest.h>

#include <random>

#include "cutpath/generators.hpp"
#include "cutpath/kernels.hpp"

using namespace cutpath;

TEST_CASE("parallel kernels match their serial references") {
  for (const auto& name : bundled_scene_names()) {
    CAPTURE(name);
    const Scene scene = bundled_scene(name, true);
    const Roadmap r = prm(scene, 300, 7, 9);
    CHECK(kernels::label_edges(scene, r) == kernels::label_edges_serial(scene, r));
  }
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Configuration> pts;
  for (int i = 0; i < 500; ++i) pts.push_back({u(rng), u(rng), u(rng)});
  pts.push_back(pts[3]);  // exact tie
  CHECK(kernels::nearest_neighbors(pts, 9) == kernels::nearest_neighbors_serial(pts, 9));
}

TEST_CASE("nearest neighbors ordering") {
  const std::vector<Configuration> pts{{0.0, 0.0}, {1.0, 0.0}, {3.0, 0.0}, {-1.0, 0.0}};
  const auto nn = kernels::nearest_neighbors_serial(pts, 2);
  CHECK(nn[0] == std::vector<VertexId>{1, 3});  // tie at distance 1, lower index first
  CHECK(nn[2] == std::vector<VertexId>{1, 0});
}
