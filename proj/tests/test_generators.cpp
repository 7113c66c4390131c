#include <doctest.h>

#include "cutpath/generators.hpp"

using namespace cutpath;

namespace {

bool same_roadmap(const Roadmap& a, const Roadmap& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (VertexId v = 0; v < static_cast<VertexId>(a.num_vertices()); ++v)
    if (!(a.vertex(v) == b.vertex(v))) return false;
  for (EdgeId e = 0; e < static_cast<EdgeId>(a.num_edges()); ++e)
    if (a.edge(e).u != b.edge(e).u || a.edge(e).v != b.edge(e).v) return false;
  return true;
}

}  // namespace

TEST_CASE("prm") {
  const Scene scene = bundled_scene("passage", false);
  const Roadmap a = prm(scene, 500, 8, 1);
  CHECK(a.num_vertices() == 500);
  // Each vertex links to 8 neighbors; mutual pairs merge.
  CHECK(a.num_edges() >= 2000);
  CHECK(a.num_edges() <= 4000);
  CHECK(same_roadmap(a, prm(scene, 500, 8, 1)));
  CHECK_FALSE(same_roadmap(a, prm(scene, 500, 8, 2)));
  const Roadmap two = prm(scene, 2, 5, 3);
  CHECK(two.num_edges() == 1);
  CHECK_THROWS(prm(scene, 1, 5, 3));
  CHECK_THROWS(prm(scene, 10, 0, 3));
}

TEST_CASE("prm edge-count tuning") {
  const Scene scene = bundled_scene("clutter", false);
  for (std::size_t target : {200, 500, 1000, 2000}) {
    std::size_t k = 0;
    const Roadmap r = prm_with_edges(scene, target / 4, target, 5, &k);
    CAPTURE(target);
    CAPTURE(k);
    CHECK(r.num_vertices() == target / 4);
    CHECK(std::abs(double(r.num_edges()) - double(target)) < 0.12 * target);
  }
}

TEST_CASE("grid") {
  const Scene scene = bundled_scene("rooms", false);
  const Roadmap g3 = grid(scene, 3, 3);
  CHECK(g3.num_vertices() == 9);
  CHECK(g3.num_edges() == 12);
  const Roadmap g2 = grid(scene, 2, 2);
  CHECK(g2.num_edges() == 4);
  const Roadmap big = grid(scene, 70, 72);
  CHECK(big.num_vertices() == 5040);
  CHECK(big.num_edges() == 70 * 71 + 72 * 69);
  CHECK_THROWS(grid(scene, 1, 5));
}

TEST_CASE("sparse roadmap") {
  Scene empty;
  empty.bounds = Box{{0.0, 0.0}, {1.0, 1.0}};
  const Roadmap one = sparse_roadmap(empty, 200, 2.0, 1);
  CHECK(one.num_vertices() <= 2);
  CHECK(one.num_edges() == 0);

  const Scene scene = bundled_scene("clutter", false);
  const Roadmap a = sparse_roadmap(scene, 3000, 0.12, 4);
  CHECK(same_roadmap(a, sparse_roadmap(scene, 3000, 0.12, 4)));
  REQUIRE(a.num_vertices() > 10);
  for (EdgeId e = 0; e < static_cast<EdgeId>(a.num_edges()); ++e)
    CHECK(evaluate_segment_base(scene, a.vertex(a.edge(e).u), a.vertex(a.edge(e).v)) == EdgeState::kFree);
  const Roadmap dense = prm(scene, a.num_vertices(), 8, 4);
  CHECK(double(a.num_edges()) / a.num_vertices() < double(dense.num_edges()) / dense.num_vertices());
}

TEST_CASE("label_and_calibrate") {
  const Scene scene = bundled_scene("zigzag", true);
  Roadmap r = prm(scene, 200, 6, 2);
  SUBCASE("perfect") {
    const auto truth = label_and_calibrate(r, scene, {PriorMode::kPerfect});
    for (EdgeId e = 0; e < static_cast<EdgeId>(r.num_edges()); ++e)
      CHECK(r.prior(e) == (truth[e] == EdgeState::kFree ? 1.0 : 0.0));
  }
  SUBCASE("noisy") {
    PriorCalibration cal;
    cal.seed = 9;
    const auto truth = label_and_calibrate(r, scene, cal);
    std::size_t collisions = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(r.num_edges()); ++e) {
      const double p = r.prior(e);
      if (truth[e] == EdgeState::kCollision) {
        ++collisions;
        CHECK(p >= 0.3);
        CHECK(p <= 0.4);
      } else {
        CHECK(p >= 0.6);
        CHECK(p <= 0.7);
      }
    }
    CHECK(collisions > 0);
    Roadmap again = prm(scene, 200, 6, 2);
    label_and_calibrate(again, scene, cal);
    for (EdgeId e = 0; e < static_cast<EdgeId>(r.num_edges()); ++e) CHECK(again.prior(e) == r.prior(e));
  }
  SUBCASE("none") {
    label_and_calibrate(r, scene, {PriorMode::kNone});
    for (EdgeId e = 0; e < static_cast<EdgeId>(r.num_edges()); ++e) CHECK(r.prior(e) == 0.5);
  }
  SUBCASE("invalid noisy parameters") {
    PriorCalibration cal;
    cal.a = 0.5;
    cal.b = 0.4;
    CHECK_THROWS(label_and_calibrate(r, scene, cal));
  }
}
