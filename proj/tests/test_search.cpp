#include <doctest.h>

#include <cmath>
#include <random>

#include "cutpath/brute_force.hpp"
#include "cutpath/search.hpp"
#include "cutpath/selftest.hpp"

using namespace cutpath;

namespace {

std::vector<ExtValue> weights(std::initializer_list<double> ps) {
  std::vector<ExtValue> out;
  for (double p : ps) out.push_back(weight_from_prob(p));
  return out;
}

std::vector<ExtValue> caps(std::initializer_list<double> ps) {
  std::vector<ExtValue> out;
  for (double p : ps) out.push_back(capacity_from_prob(p));
  return out;
}

std::optional<CandidateCut> cut_st(std::size_t n, const std::vector<Edge>& edges,
                                   const std::vector<ExtValue>& c, VertexId s, VertexId t) {
  return most_probable_cut(n, edges, c, std::span<const VertexId>(&s, 1), std::span<const VertexId>(&t, 1));
}

}  // namespace

TEST_CASE("most_probable_path examples") {
  // 0 = v_s, 1 = a, 2 = v_g
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  const auto p = most_probable_path(3, edges, weights({0.9, 0.9, 0.5}), 0, 2);
  REQUIRE(p);
  CHECK(p->edges == std::vector<EdgeId>{0, 1});
  CHECK(p->vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(std::exp(-p->total_weight) == doctest::Approx(0.81));

  const std::vector<Edge> line{{0, 1}, {1, 2}};
  CHECK_FALSE(most_probable_path(3, line, weights({0.9, 0.0}), 0, 2));

  const std::vector<Edge> one{{0, 1}};
  const auto q = most_probable_path(2, one, weights({1.0}), 0, 1);
  REQUIRE(q);
  CHECK(q->total_weight == 0.0);
  CHECK_THROWS_AS(most_probable_path(2, one, weights({1.0}), 0, 5), std::out_of_range);
}

TEST_CASE("most_probable_path tie-breaking prefers smaller predecessor") {
  // Two equal-probability routes 0-1-3 and 0-2-3.
  const std::vector<Edge> edges{{0, 2}, {2, 3}, {0, 1}, {1, 3}};
  const auto p = most_probable_path(4, edges, weights({0.5, 0.5, 0.5, 0.5}), 0, 3);
  REQUIRE(p);
  CHECK(p->vertices == std::vector<VertexId>{0, 1, 3});
}

TEST_CASE("most_probable_cut examples") {
  const std::vector<Edge> line{{0, 1}, {1, 2}};
  const auto c = cut_st(3, line, caps({0.3, 0.6}), 0, 2);
  REQUIRE(c);
  CHECK(c->edges == std::vector<EdgeId>{0});
  CHECK(c->total_capacity == doctest::Approx(std::log(1.0 / 0.7)));
  CHECK(c->partition[0] == Side::kSource);
  CHECK(c->partition[1] == Side::kSink);

  // Every path shares the zero-capacity bridge 2-3.
  const std::vector<Edge> bridge{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
  const auto b = cut_st(6, bridge, caps({0.5, 0.5, 0.5, 0.0, 0.5, 0.5, 0.5}), 0, 5);
  REQUIRE(b);
  CHECK(b->edges == std::vector<EdgeId>{3});
  CHECK(b->total_capacity == 0.0);

  // Diamond against brute force.
  const std::vector<Edge> diamond{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 2}};
  const std::vector<double> ps{0.2, 0.7, 0.9, 0.4, 0.5};
  std::vector<ExtValue> dc;
  std::vector<double> raw;
  for (double p : ps) {
    dc.push_back(capacity_from_prob(p));
    raw.push_back(dc.back().value());
  }
  const auto d = cut_st(4, diamond, dc, 0, 3);
  REQUIRE(d);
  CHECK(d->total_capacity == doctest::Approx(brute::min_cut_capacity(4, diamond, raw, 0, 3)).epsilon(1e-12));
}

TEST_CASE("most_probable_cut returns NONE when every cut uses INF") {
  const std::vector<Edge> line{{0, 1}, {1, 2}};
  CHECK_FALSE(cut_st(3, line, caps({1.0, 1.0}), 0, 2));
  std::vector<ExtValue> mixed{ExtValue::inf(), ExtValue::finite(0.5)};
  const auto c = cut_st(3, line, mixed, 0, 2);
  REQUIRE(c);
  CHECK(c->edges == std::vector<EdgeId>{1});
}

TEST_CASE("most_probable_cut terminal validation and multi-terminal") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
  const auto c = caps({0.5, 0.5, 0.5});
  CHECK_THROWS(most_probable_cut(4, edges, c, {}, std::vector<VertexId>{3}));
  const std::vector<VertexId> s{0, 1};
  const std::vector<VertexId> t{1, 3};
  CHECK_THROWS(most_probable_cut(4, edges, c, s, t));
  const std::vector<VertexId> s2{0, 1};
  const std::vector<VertexId> t2{3};
  const auto cut = most_probable_cut(4, edges, caps({0.1, 0.2, 0.9}), s2, t2);
  REQUIRE(cut);
  CHECK(cut->edges == std::vector<EdgeId>{1});
}

TEST_CASE("bfs_connected") {
  const std::vector<Edge> none;
  CHECK(bfs_connected(3, none, 1, 1));
  CHECK_FALSE(bfs_connected(3, none, 0, 2));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = brute::random_graph(rng, 20, 0.12);
    std::vector<bool> all(g.edges.size(), true);
    const int t = static_cast<int>(g.n) - 1;
    CHECK(bfs_connected(g.n, g.edges, 0, t) == brute::connected(g.n, g.edges, all, 0, t));
  }
}

TEST_CASE("max flow on a classic network") {
  MaxFlow f(6);
  f.add_arc_pair(0, 1, 16, 0);
  f.add_arc_pair(0, 2, 13, 0);
  f.add_arc_pair(1, 2, 10, 0);
  f.add_arc_pair(2, 1, 4, 0);
  f.add_arc_pair(1, 3, 12, 0);
  f.add_arc_pair(3, 2, 9, 0);
  f.add_arc_pair(2, 4, 14, 0);
  f.add_arc_pair(4, 3, 7, 0);
  f.add_arc_pair(3, 5, 20, 0);
  f.add_arc_pair(4, 5, 4, 0);
  CHECK(f.solve(0, 5) == doctest::Approx(23.0));
  CHECK(f.source_side()[0]);
  CHECK_FALSE(f.source_side()[5]);
}

TEST_CASE("search engines against brute force") {
  const auto path = selftest::check_path_engine(300, 10, 21);
  CHECK_MESSAGE(path.ok(), path.first_failure);
  const auto cut = selftest::check_cut_engine(300, 12, 22);
  CHECK_MESSAGE(cut.ok(), cut.first_failure);
}

TEST_CASE("larger random cut instances: flow equals brute-force reference flow") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = brute::random_graph(rng, 40, 0.2);
    std::vector<ExtValue> c;
    std::vector<double> raw;
    for (double p : g.probs) {
      const double q = std::clamp(p, 0.01, 0.99);
      c.push_back(capacity_from_prob(q));
      raw.push_back(c.back().value());
    }
    const VertexId s = 0;
    const VertexId t = static_cast<VertexId>(g.n) - 1;
    const auto cut = cut_st(g.n, g.edges, c, s, t);
    REQUIRE(cut);
    CHECK(cut->flow_value == doctest::Approx(brute::edmonds_karp(g.n, g.edges, raw, s, t)).epsilon(1e-9));
    CHECK(cut->total_capacity == doctest::Approx(cut->flow_value).epsilon(1e-9));
  }
}
