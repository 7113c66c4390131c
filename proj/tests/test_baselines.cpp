#include <doctest.h>

#include "cutpath/baselines.hpp"
#include "cutpath/bench.hpp"
#include "cutpath/ipc.hpp"

using namespace cutpath;

namespace {

constexpr auto F = EdgeState::kFree;
constexpr auto C = EdgeState::kCollision;

Roadmap line(std::size_t n, double p) {
  Roadmap r(2);
  for (std::size_t i = 0; i < n; ++i) r.add_vertex({double(i), 0.0});
  for (std::size_t i = 0; i + 1 < n; ++i) r.add_edge(i, i + 1, p);
  r.set_query(0, static_cast<VertexId>(n) - 1);
  return r;
}

// Two 4-cliques {0..3} and {4..7} joined by the bridge 3-4.
Roadmap cliques_with_bridge(double p) {
  Roadmap r(2);
  for (int i = 0; i < 8; ++i) r.add_vertex({double(i), 0.0});
  for (int base : {0, 4})
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) r.add_edge(base + i, base + j, p);
  r.add_edge(3, 4, p);
  r.set_query(0, 7);
  return r;
}

}  // namespace

TEST_CASE("path_only") {
  Roadmap perfect = line(4, 1.0);
  const Verdict v = path_only(perfect, TableOracle({F, F, F}));
  CHECK(v.feasible());
  CHECK(v.stats.n_evaluations == 0);
  CHECK(v.stats.n_path_calls == 1);

  Roadmap bridge = cliques_with_bridge(0.5);
  std::vector<EdgeState> truth(bridge.num_edges(), F);
  truth.back() = C;
  const Verdict b = path_only(bridge, TableOracle(truth));
  CHECK_FALSE(b.feasible());
  CHECK(b.cut().edges == std::vector<EdgeId>{static_cast<EdgeId>(truth.size() - 1)});
  CHECK(certificate_error(bridge, b, truth).empty());
}

TEST_CASE("cut_only") {
  Roadmap perfect = line(4, 1.0);
  perfect.set_prior(1, 0.0);
  const Verdict v = cut_only(perfect, TableOracle({F, C, F}));
  CHECK_FALSE(v.feasible());
  CHECK(v.stats.n_evaluations == 0);
  CHECK(v.stats.n_cut_calls == 1);

  Roadmap bridge = cliques_with_bridge(0.5);
  std::vector<EdgeState> truth(bridge.num_edges(), F);
  const Verdict b = cut_only(bridge, TableOracle(truth));
  CHECK(b.feasible());
  CHECK(certificate_error(bridge, b, truth).empty());
  CHECK(bridge.state(static_cast<EdgeId>(truth.size() - 1)) == F);
}

TEST_CASE("bfs_feasibility") {
  SUBCASE("straight corridor") {
    Roadmap r = line(5, 0.5);
    const Verdict v = bfs_feasibility(r, TableOracle({F, F, F, F}));
    CHECK(v.feasible());
    CHECK(v.stats.n_evaluations == 4);
  }
  SUBCASE("goal edges all in collision") {
    Roadmap r = cliques_with_bridge(0.5);
    std::vector<EdgeState> truth(r.num_edges(), F);
    for (EdgeId e = 0; e < static_cast<EdgeId>(r.num_edges()); ++e) {
      const auto& ed = r.edge(e);
      if (ed.u == 7 || ed.v == 7) truth[e] = C;
    }
    const Verdict v = bfs_feasibility(r, TableOracle(truth));
    CHECK_FALSE(v.feasible());
    CHECK(v.stats.n_evaluations == r.num_edges());
    CHECK(certificate_error(r, v, truth).empty());
  }
  SUBCASE("disconnected prior graph") {
    Roadmap r(2);
    for (int i = 0; i < 4; ++i) r.add_vertex({double(i), 0.0});
    r.add_edge(0, 1, 0.5);
    r.add_edge(2, 3, 0.5);
    r.set_query(0, 3);
    const Verdict v = bfs_feasibility(r, TableOracle({F, F}));
    CHECK_FALSE(v.feasible());
    CHECK(v.cut().edges.empty());
  }
}

TEST_CASE("baselines agree with ground truth on generated instances") {
  bench::BenchConfig cfg;
  cfg.scenes = {"passage", "rooms", "zigzag", "clutter"};
  cfg.n_edges = {200};
  cfg.priors = {PriorMode::kNoisy, PriorMode::kNone};
  cfg.seeds = {7};
  for (const auto& inst : bench::generate_instances(cfg)) {
    CAPTURE(inst.id);
    for (const char* name : {"path_only", "cut_only", "bfs"}) {
      CAPTURE(name);
      const Verdict v = bench::run_algorithm(name, inst, 1);
      CHECK(v.feasible() == inst.ground_truth_feasible);
      CHECK(certificate_error(inst.roadmap, v, inst.truth).empty());
      CHECK(v.stats.n_evaluations <= inst.roadmap.num_edges());
    }
  }
}
